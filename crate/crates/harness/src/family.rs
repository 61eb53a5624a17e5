//! Text names for the constructible families, shared by `construct` and the
//! `builtin` catalog kind. Tokens may be separated by spaces, `:` or `,`.
//!
//! ```text
//! cyclic 12        abelian 4 2 2      dihedral 16     quaternion 4
//! semidihedral 5   modular 2 4        heisenberg 3    extraspecial 3 1 -
//! central-product 2 1 cyclic 2        central-product 3 1 modular 3
//! smallgroup-32-8  trivial
//! ```

use cdlat_core::constructors::{CentralFactor, ExtraspecialType, FamilySpec};
use cdlat_core::{Group, DEFAULT_ORDER_CAP};

use crate::error::{HarnessError, Result};

pub const FAMILY_HELP: &str = "cyclic N | abelian N1 N2 .. | dihedral 2N | quaternion n | semidihedral n | \
modular p n | heisenberg p | extraspecial p m (+|-) | central-product p m (cyclic t|modular n) | \
smallgroup-32-8 | trivial";

pub fn split_tokens(s: &str) -> Vec<String> {
    s.split(|c: char| c.is_whitespace() || c == ':' || c == ',')
        .filter(|t| !t.is_empty())
        .map(str::to_string)
        .collect()
}

fn usage(msg: impl Into<String>) -> HarnessError {
    HarnessError::Usage(format!("{}; expected one of: {FAMILY_HELP}", msg.into()))
}

fn num<T: std::str::FromStr>(tokens: &[String], i: usize, what: &str) -> Result<T> {
    let t = tokens.get(i).ok_or_else(|| usage(format!("missing {what}")))?;
    t.parse().map_err(|_| usage(format!("bad {what} `{t}`")))
}

fn arity(tokens: &[String], n: usize) -> Result<()> {
    if tokens.len() != n + 1 {
        return Err(usage(format!("`{}` takes {n} parameter(s)", tokens[0])));
    }
    Ok(())
}

/// `None` stands for the trivial group, which has no family spec.
pub fn parse_family(tokens: &[String]) -> Result<Option<FamilySpec>> {
    let head = tokens.first().ok_or_else(|| usage("empty family"))?;
    let spec = match head.to_ascii_lowercase().as_str() {
        "trivial" => {
            arity(tokens, 0)?;
            return Ok(None);
        }
        "cyclic" | "c" => {
            arity(tokens, 1)?;
            FamilySpec::Cyclic { n: num(tokens, 1, "order")? }
        }
        "abelian" => {
            if tokens.len() < 2 {
                return Err(usage("`abelian` needs at least one invariant"));
            }
            let invariants = (1..tokens.len())
                .map(|i| num(tokens, i, "invariant"))
                .collect::<Result<Vec<usize>>>()?;
            FamilySpec::AbelianOfType { invariants }
        }
        "dihedral" | "d" => {
            arity(tokens, 1)?;
            FamilySpec::Dihedral { order: num(tokens, 1, "order")? }
        }
        "quaternion" | "q" => {
            arity(tokens, 1)?;
            FamilySpec::GeneralizedQuaternion { n: num(tokens, 1, "exponent")? }
        }
        "semidihedral" | "sd" => {
            arity(tokens, 1)?;
            FamilySpec::Semidihedral { n: num(tokens, 1, "exponent")? }
        }
        "modular" | "m" => {
            arity(tokens, 2)?;
            FamilySpec::ModularM { p: num(tokens, 1, "prime")?, n: num(tokens, 2, "exponent")? }
        }
        "heisenberg" => {
            arity(tokens, 1)?;
            FamilySpec::Extraspecial {
                p: num(tokens, 1, "prime")?,
                m: 1,
                kind: ExtraspecialType::Plus,
            }
        }
        "extraspecial" | "es" => {
            arity(tokens, 3)?;
            let kind = match tokens[3].as_str() {
                "+" | "plus" => ExtraspecialType::Plus,
                "-" | "minus" => ExtraspecialType::Minus,
                t => return Err(usage(format!("bad extraspecial type `{t}`"))),
            };
            FamilySpec::Extraspecial { p: num(tokens, 1, "prime")?, m: num(tokens, 2, "rank")?, kind }
        }
        "central-product" | "ea" => {
            arity(tokens, 4)?;
            let k = num(tokens, 4, "exponent")?;
            let factor = match tokens[3].as_str() {
                "cyclic" => CentralFactor::Cyclic(k),
                "modular" => CentralFactor::Modular(k),
                t => return Err(usage(format!("bad central factor `{t}`"))),
            };
            FamilySpec::CentralProductEA { p: num(tokens, 1, "prime")?, m: num(tokens, 2, "rank")?, factor }
        }
        "smallgroup-32-8" => {
            arity(tokens, 0)?;
            FamilySpec::SmallGroup32_8
        }
        other => return Err(usage(format!("unknown family `{other}`"))),
    };
    Ok(Some(spec))
}

pub fn build_family(tokens: &[String]) -> Result<Group> {
    build_family_with_cap(tokens, DEFAULT_ORDER_CAP)
}

pub fn build_family_with_cap(tokens: &[String], cap: usize) -> Result<Group> {
    Ok(match parse_family(tokens)? {
        None => Group::trivial(),
        Some(spec) => spec.build_with_cap(cap)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> Result<Group> {
        build_family(&split_tokens(s))
    }

    #[test]
    fn families_build() {
        assert_eq!(build("cyclic 12").unwrap().order(), 12);
        assert_eq!(build("abelian:4,2,2").unwrap().order(), 16);
        assert_eq!(build("dihedral 8").unwrap().order(), 8);
        assert_eq!(build("quaternion 4").unwrap().order(), 16);
        assert_eq!(build("extraspecial 3 1 -").unwrap().order(), 27);
        assert_eq!(build("heisenberg 5").unwrap().order(), 125);
        assert_eq!(build("central-product 2 1 cyclic 2").unwrap().order(), 16);
        assert_eq!(build("smallgroup-32-8").unwrap().order(), 32);
        assert_eq!(build("trivial").unwrap().order(), 1);
    }

    #[test]
    fn bad_family_is_usage_error() {
        assert!(matches!(build("dodecahedral 60"), Err(HarnessError::Usage(_))));
        assert!(matches!(build("cyclic"), Err(HarnessError::Usage(_))));
        assert!(matches!(build("cyclic x"), Err(HarnessError::Usage(_))));
        assert!(matches!(build("extraspecial 2 1 *"), Err(HarnessError::Usage(_))));
        assert!(matches!(build("modular 4 3"), Err(HarnessError::Core(_))));
    }
}
