//! Finite presentations: a small text format and coset enumeration.
//!
//! ```text
//! gens a, b;
//! rels a^4, b^2 = a^2, b^-1*a*b = a^-1;
//! ```
//!
//! A relation `u = v` is stored as the relator `u v^-1`. Words are expanded
//! into letters `x` / `x^-1` and freely and cyclically reduced.

mod enumerate;
mod parse;

use std::fmt;

pub use enumerate::{enumerate, enumerate_with_images, DEFAULT_MAX_COSETS};
pub use parse::{parse_presentation, parse_presentation_file};

use crate::group::Group;
use crate::{Error, Result};

/// One generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn inverted(self) -> Letter {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    /// Column in a coset table: `2 * gen` for the generator, `+1` for its
    /// inverse.
    pub(crate) fn column(self) -> usize {
        2 * self.gen + self.inverse as usize
    }
}

pub type Word = Vec<Letter>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Builds a presentation from already-resolved relator words, normalizing
    /// them and dropping those that reduce to the empty word.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Presentation> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(Error::Precondition(format!("generator `{g}` declared twice")));
            }
        }
        let mut rels = Vec::with_capacity(relators.len());
        for w in relators {
            if let Some(l) = w.iter().find(|l| l.gen >= generators.len()) {
                return Err(Error::Precondition(format!(
                    "relator uses undeclared generator index {}",
                    l.gen
                )));
            }
            let w = cyclically_reduce(free_reduce(&w));
            if !w.is_empty() {
                rels.push(w);
            }
        }
        Ok(Presentation {
            generators,
            relators: rels,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn with_relators(&self, relators: Vec<Word>) -> Result<Presentation> {
        Presentation::new(self.generators.clone(), relators)
    }

    /// Value of `word` in `g`, given the element assigned to each generator.
    pub fn evaluate(&self, g: &Group, images: &[usize], word: &[Letter]) -> usize {
        word.iter().fold(0, |acc, l| {
            let x = images[l.gen];
            g.mul(acc, if l.inverse { g.inv(x) } else { x })
        })
    }

    /// True when every relator evaluates to the identity, checked by tracing
    /// each relator from every element.
    pub fn is_satisfied_by(&self, g: &Group, images: &[usize]) -> bool {
        self.relators.iter().all(|r| {
            (0..g.order()).all(|x| {
                let end = r.iter().fold(x, |acc, l| {
                    let y = images[l.gen];
                    g.mul(acc, if l.inverse { g.inv(y) } else { y })
                });
                end == x
            })
        })
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens {}; rels ", self.generators.join(", "))?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            // Group runs of the same letter into powers.
            let mut j = 0;
            let mut first = true;
            while j < r.len() {
                let mut k = j;
                while k < r.len() && r[k] == r[j] {
                    k += 1;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                let exp = (k - j) as i64 * if r[j].inverse { -1 } else { 1 };
                write!(f, "{}", self.generators[r[j].gen])?;
                if exp != 1 {
                    write!(f, "^{exp}")?;
                }
                j = k;
            }
        }
        write!(f, ";")
    }
}

pub(crate) fn free_reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&l.inverted()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn cyclically_reduce(mut w: Word) -> Word {
    let mut start = 0;
    let mut end = w.len();
    while end - start >= 2 && w[start] == w[end - 1].inverted() {
        start += 1;
        end -= 1;
    }
    w.truncate(end);
    w.drain(..start);
    w
}

pub(crate) fn invert_word(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.inverted()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(gen: usize, inverse: bool) -> Letter {
        Letter { gen, inverse }
    }

    #[test]
    fn reduction() {
        let w = vec![l(1, true), l(0, false), l(0, true), l(1, false), l(0, false)];
        assert_eq!(free_reduce(&w), vec![l(0, false)]);
        let w = vec![l(1, true), l(0, false), l(1, false)];
        assert_eq!(cyclically_reduce(free_reduce(&w)), vec![l(0, false)]);
        let p = Presentation::new(vec!["a".into()], vec![vec![l(0, false), l(0, true)]]).unwrap();
        assert!(p.relators().is_empty());
    }

    #[test]
    fn display_round_trips_through_parser() {
        let p = parse_presentation("gens a,b; rels a^4, b^2 = a^2, b^-1*a*b = a^-1;").unwrap();
        let again = parse_presentation(&p.to_string()).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn duplicate_generators_rejected() {
        assert!(Presentation::new(vec!["a".into(), "a".into()], vec![]).is_err());
        assert!(matches!(Presentation::new(vec![], vec![]), Err(Error::EmptyGenerators)));
    }
}
