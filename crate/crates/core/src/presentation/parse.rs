use super::{invert_word, Letter, Presentation, Word};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Name(String),
    Int(i64),
    Sym(char),
    Eof,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str, line_offset: usize) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let mut line = 1 + line_offset;
    let mut col = 1;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l0, c0) = (line, col);
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            chars.next();
            col += 1;
        } else if c == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                chars.next();
            }
        } else if c.is_ascii_alphabetic() {
            let mut name = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    name.push(c);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            out.push(Spanned { tok: Tok::Name(name), line: l0, col: c0 });
        } else if c.is_ascii_digit() || c == '-' {
            let mut s = String::new();
            if c == '-' {
                s.push(c);
                chars.next();
                col += 1;
            }
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    s.push(c);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            let v = s.parse::<i64>().map_err(|_| Error::Syntax {
                line: l0,
                col: c0,
                msg: format!("malformed integer `{s}`"),
            })?;
            out.push(Spanned { tok: Tok::Int(v), line: l0, col: c0 });
        } else if ",;*^=".contains(c) {
            chars.next();
            col += 1;
            out.push(Spanned { tok: Tok::Sym(c), line: l0, col: c0 });
        } else {
            return Err(Error::Syntax {
                line: l0,
                col: c0,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    out.push(Spanned { tok: Tok::Eof, line, col });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    gens: Vec<String>,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, t: &Spanned, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            line: t.line,
            col: t.col,
            msg: msg.into(),
        })
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        let t = self.next();
        if t.tok == Tok::Sym(c) {
            Ok(())
        } else {
            self.err(&t, format!("expected `{c}`, found {}", describe(&t.tok)))
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<()> {
        let t = self.next();
        match &t.tok {
            Tok::Name(n) if n == kw => Ok(()),
            other => self.err(&t, format!("expected `{kw}`, found {}", describe(other))),
        }
    }

    fn file(&mut self) -> Result<Presentation> {
        self.expect_keyword("gens")?;
        if self.peek().tok == Tok::Sym(';') {
            return Err(Error::EmptyGenerators);
        }
        loop {
            let t = self.next();
            match &t.tok {
                Tok::Name(n) => {
                    if self.gens.contains(n) {
                        return self.err(&t, format!("generator `{n}` declared twice"));
                    }
                    self.gens.push(n.clone());
                }
                other => return self.err(&t, format!("expected generator name, found {}", describe(other))),
            }
            if self.peek().tok == Tok::Sym(',') {
                self.next();
            } else {
                break;
            }
        }
        self.expect_sym(';')?;
        self.expect_keyword("rels")?;
        let mut rels = Vec::new();
        if self.peek().tok != Tok::Sym(';') {
            loop {
                rels.push(self.relation()?);
                if self.peek().tok == Tok::Sym(',') {
                    self.next();
                } else {
                    break;
                }
            }
        }
        self.expect_sym(';')?;
        let t = self.next();
        if t.tok != Tok::Eof {
            return self.err(&t, format!("trailing input: {}", describe(&t.tok)));
        }
        Presentation::new(std::mem::take(&mut self.gens), rels)
    }

    fn relation(&mut self) -> Result<Word> {
        let mut lhs = self.word()?;
        if self.peek().tok == Tok::Sym('=') {
            self.next();
            let rhs = self.word()?;
            lhs.extend(invert_word(&rhs));
        }
        Ok(lhs)
    }

    fn word(&mut self) -> Result<Word> {
        let mut w = self.term()?;
        while self.peek().tok == Tok::Sym('*') {
            self.next();
            w.extend(self.term()?);
        }
        Ok(w)
    }

    fn term(&mut self) -> Result<Word> {
        let t = self.next();
        let gen = match &t.tok {
            Tok::Name(n) => match self.gens.iter().position(|g| g == n) {
                Some(i) => i,
                None => {
                    return Err(Error::UnknownGenerator {
                        name: n.clone(),
                        line: t.line,
                        col: t.col,
                    })
                }
            },
            // The literal `1` stands for the empty word.
            Tok::Int(1) => return Ok(Vec::new()),
            other => return self.err(&t, format!("expected generator, found {}", describe(other))),
        };
        let mut exp = 1i64;
        if self.peek().tok == Tok::Sym('^') {
            self.next();
            let t = self.next();
            match t.tok {
                Tok::Int(v) => exp = v,
                ref other => return self.err(&t, format!("expected integer exponent, found {}", describe(other))),
            }
        }
        let letter = Letter {
            gen,
            inverse: exp < 0,
        };
        Ok(vec![letter; exp.unsigned_abs() as usize])
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Name(n) => format!("`{n}`"),
        Tok::Int(v) => format!("`{v}`"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::Eof => "end of input".into(),
    }
}

fn parse_at(text: &str, line_offset: usize) -> Result<Presentation> {
    let toks = lex(text, line_offset)?;
    Parser {
        toks,
        pos: 0,
        gens: Vec::new(),
    }
    .file()
}

/// Parses one presentation. `#` starts a comment running to end of line.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    parse_at(text, 0)
}

/// Parses a corpus file: blocks introduced by `# name` header lines, each
/// holding one presentation. Error positions refer to the whole file.
pub fn parse_presentation_file(text: &str) -> Result<Vec<(String, Presentation)>> {
    let mut blocks: Vec<(String, usize, String)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if let Some(name) = line.trim_start().strip_prefix('#') {
            blocks.push((name.trim().to_string(), i + 1, String::new()));
        } else if line.trim().is_empty() {
            if let Some(b) = blocks.last_mut() {
                b.2.push('\n');
            }
        } else {
            match blocks.last_mut() {
                Some(b) => {
                    b.2.push_str(line);
                    b.2.push('\n');
                }
                None => {
                    return Err(Error::Syntax {
                        line: i + 1,
                        col: 1,
                        msg: "presentation before the first `# name` header".into(),
                    })
                }
            }
        }
    }
    blocks
        .into_iter()
        .filter(|b| !b.2.trim().is_empty())
        .map(|(name, header_line, body)| Ok((name, parse_at(&body, header_line)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_presentation() {
        let p = parse_presentation("gens a; rels a^5;").unwrap();
        assert_eq!(p.generators().len(), 1);
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.relators()[0].len(), 5);
    }

    #[test]
    fn quaternion_presentation() {
        let p = parse_presentation("gens a,b; rels a^4, b^2 = a^2, b^-1*a*b = a^-1;").unwrap();
        assert_eq!(p.generators(), ["a", "b"]);
        assert_eq!(p.relators().len(), 3);
        // b^2 a^-2
        assert_eq!(p.relators()[1].len(), 4);
        // b^-1 a b a
        assert_eq!(p.relators()[2].len(), 4);
    }

    #[test]
    fn modular_presentation_and_identity_literal() {
        let p = parse_presentation("gens a,b; rels a^8, b^2, b^-1*a*b = a^5;").unwrap();
        assert_eq!(p.relators().len(), 3);
        let q = parse_presentation("gens a , b ;\n rels a^8 = 1, b^2=1, b^-1 * a * b = a^5 ;").unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_presentation("gens a;\nrels a^2, b;") {
            Err(Error::UnknownGenerator { name, line, col }) => {
                assert_eq!((name.as_str(), line, col), ("b", 2, 11));
            }
            other => panic!("{other:?}"),
        }
        match parse_presentation("gens a; rels a^^2;") {
            Err(Error::Syntax { line: 1, col: 16, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_presentation("gens ; rels a;"), Err(Error::EmptyGenerators)));
        assert!(matches!(parse_presentation("gens a; rels a; extra"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_presentation("gens a; rels a$;"), Err(Error::Syntax { col: 15, .. })));
        assert!(parse_presentation("gens a, a; rels a;").is_err());
    }

    #[test]
    fn corpus_file_blocks() {
        let text = "# C3\ngens a; rels a^3;\n\n# V4\ngens a,b;\nrels a^2, b^2, a*b=b*a;\n";
        let blocks = parse_presentation_file(text).unwrap();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[1].0, "V4");
        match parse_presentation_file("# X\ngens a;\nrels q;\n") {
            Err(Error::UnknownGenerator { line: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
    }
}
