//! Built-in group families and the verification corpus.

use std::fmt;

use crate::arith::is_prime;
use crate::group::{central_product, direct_product_with_cap, Group, DEFAULT_ORDER_CAP};
use crate::presentation::{enumerate, parse_presentation, parse_presentation_file, DEFAULT_MAX_COSETS};
use crate::{Error, Result};

/// The fourteen groups of order 16, one presentation per `# name` block.
pub const ORDER16_PRESENTATIONS: &str = include_str!("../data/order16.pres");

/// SmallGroup(32,8): `<a,b,c | a^4 = 1, b^4 = a^2, c^2 = bab^-1 = a^-1,
/// ac = ca, cbc^-1 = a^-1 b^3>`.
pub const SMALLGROUP_32_8: &str =
    "gens a, b, c; rels a^4, b^4 = a^2, c^2 = a^-1, b*a*b^-1 = a^-1, a*c = c*a, c*b*c^-1 = a^-1*b^3;";

/// Extraspecial groups above this order are left out of the builtin corpus:
/// their Chermak-Delgado lattices run to thousands of members.
const CORPUS_EXTRASPECIAL_MAX: usize = 125;
/// Non-cyclic abelian groups are included up to this order.
const CORPUS_ABELIAN_MAX: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtraspecialType {
    Plus,
    Minus,
}

impl fmt::Display for ExtraspecialType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtraspecialType::Plus => "+",
            ExtraspecialType::Minus => "-",
        })
    }
}

/// The second factor of `E * A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CentralFactor {
    /// `M(n,1)` with the given `n >= 3`.
    Modular(u32),
    /// `C_{p^t}` with the given `t >= 2`.
    Cyclic(u32),
}

/// A named family with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Cyclic { n: usize },
    AbelianOfType { invariants: Vec<usize> },
    Dihedral { order: usize },
    GeneralizedQuaternion { n: u32 },
    Semidihedral { n: u32 },
    ModularM { p: u64, n: u32 },
    Extraspecial { p: u64, m: u32, kind: ExtraspecialType },
    CentralProductEA { p: u64, m: u32, factor: CentralFactor },
    SmallGroup32_8,
}

impl FamilySpec {
    /// Order of the group this spec describes, or `None` on overflow.
    pub fn expected_order(&self) -> Option<u64> {
        use FamilySpec::*;
        Some(match *self {
            Cyclic { n } => n as u64,
            AbelianOfType { ref invariants } => invariants
                .iter()
                .try_fold(1u64, |acc, &k| acc.checked_mul(k as u64))?,
            Dihedral { order } => order as u64,
            GeneralizedQuaternion { n } | Semidihedral { n } => 2u64.checked_pow(n)?,
            ModularM { p, n } => p.checked_pow(n + 1)?,
            Extraspecial { p, m, .. } => p.checked_pow(2 * m + 1)?,
            CentralProductEA { p, m, factor } => match factor {
                CentralFactor::Modular(n) => p.checked_pow(2 * m + n + 1)?,
                CentralFactor::Cyclic(t) => p.checked_pow(2 * m + t)?,
            },
            SmallGroup32_8 => 32,
        })
    }

    pub fn build(&self) -> Result<Group> {
        self.build_with_cap(DEFAULT_ORDER_CAP)
    }

    pub fn build_with_cap(&self, cap: usize) -> Result<Group> {
        use FamilySpec::*;
        match self.expected_order() {
            Some(o) if o <= cap as u64 => {}
            o => {
                return Err(Error::OrderCap {
                    order: o.map_or(usize::MAX, |o| o as usize),
                    cap,
                })
            }
        }
        match *self {
            Cyclic { n } => cyclic_with_cap(n, cap),
            AbelianOfType { ref invariants } => abelian_of_type_with_cap(invariants, cap),
            Dihedral { order } => dihedral(order),
            GeneralizedQuaternion { n } => generalized_quaternion(n),
            Semidihedral { n } => semidihedral(n),
            ModularM { p, n } => modular_m(p, n),
            Extraspecial { p, m, kind } => extraspecial_with_cap(p, m, kind, cap),
            CentralProductEA { p, m, factor } => central_product_ea_with_cap(p, m, factor, cap),
            SmallGroup32_8 => smallgroup_32_8(),
        }
    }
}

fn check_cap(order: u64, cap: usize) -> Result<()> {
    if order > cap as u64 {
        Err(Error::OrderCap {
            order: order.min(usize::MAX as u64) as usize,
            cap,
        })
    } else {
        Ok(())
    }
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{p} is not prime")))
    }
}

fn from_presentation(text: &str, label: String) -> Result<Group> {
    let p = parse_presentation(text)?;
    Ok(enumerate(&p, DEFAULT_MAX_COSETS)?.with_label(label))
}

pub fn cyclic(n: usize) -> Result<Group> {
    cyclic_with_cap(n, DEFAULT_ORDER_CAP)
}

pub fn cyclic_with_cap(n: usize, cap: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::Precondition("cyclic group of order 0".into()));
    }
    check_cap(n as u64, cap)?;
    let table = (0..n)
        .flat_map(|i| (0..n).map(move |j| ((i + j) % n) as u32))
        .collect();
    Group::from_table(n, table, format!("C{n}"))
}

/// Direct product of cyclic groups of the given orders.
pub fn abelian_of_type(invariants: &[usize]) -> Result<Group> {
    abelian_of_type_with_cap(invariants, DEFAULT_ORDER_CAP)
}

pub fn abelian_of_type_with_cap(invariants: &[usize], cap: usize) -> Result<Group> {
    let Some((&first, rest)) = invariants.split_first() else {
        return Ok(Group::trivial());
    };
    let mut g = cyclic_with_cap(first, cap)?;
    for &k in rest {
        g = direct_product_with_cap(&g, &cyclic_with_cap(k, cap)?, cap)?;
    }
    let label = invariants
        .iter()
        .map(|k| format!("C{k}"))
        .collect::<Vec<_>>()
        .join("x");
    Ok(g.with_label(label))
}

/// Dihedral group of order `two_n`; `r^i s^j` is stored at `i + j * n`.
pub fn dihedral(two_n: usize) -> Result<Group> {
    if two_n < 4 || !two_n.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "dihedral order must be even and at least 4, got {two_n}"
        )));
    }
    check_cap(two_n as u64, DEFAULT_ORDER_CAP)?;
    let n = two_n / 2;
    let mut table = Vec::with_capacity(two_n * two_n);
    for x in 0..two_n {
        let (i, a) = (x % n, x / n);
        for y in 0..two_n {
            let (k, b) = (y % n, y / n);
            let rot = if a == 0 { (i + k) % n } else { (i + n - k) % n };
            table.push((rot + ((a + b) % 2) * n) as u32);
        }
    }
    Group::from_table(two_n, table, format!("D{two_n}"))
}

pub fn generalized_quaternion(n: u32) -> Result<Group> {
    if n < 3 {
        return Err(Error::Precondition(format!("Q_2^n needs n >= 3, got {n}")));
    }
    let order = 2u64.checked_pow(n).unwrap_or(u64::MAX);
    check_cap(order, DEFAULT_ORDER_CAP)?;
    let text = format!(
        "gens a, b; rels a^{}, a^{} = b^2, b^-1*a*b = a^-1;",
        1u64 << (n - 1),
        1u64 << (n - 2)
    );
    from_presentation(&text, format!("Q{order}"))
}

pub fn semidihedral(n: u32) -> Result<Group> {
    if n < 4 {
        return Err(Error::Precondition(format!("SD_2^n needs n >= 4, got {n}")));
    }
    let order = 2u64.checked_pow(n).unwrap_or(u64::MAX);
    check_cap(order, DEFAULT_ORDER_CAP)?;
    let text = format!(
        "gens a, b; rels a^{}, b^2, b^-1*a*b = a^{};",
        1u64 << (n - 1),
        (1u64 << (n - 2)) - 1
    );
    from_presentation(&text, format!("SD{order}"))
}

/// `M(n,1) = <a, b | a^(p^n) = b^p = 1, a^b = a^(1 + p^(n-1))>`, `n >= 3`.
pub fn modular_m(p: u64, n: u32) -> Result<Group> {
    if n < 3 {
        return Err(Error::Precondition(format!("M(n,1) needs n >= 3, got {n}")));
    }
    modular_group(p, n)
}

/// The same presentation for any `n >= 2`; `n = 2` gives the extraspecial
/// group of order `p^3` and exponent `p^2` (for odd `p`).
fn modular_group(p: u64, n: u32) -> Result<Group> {
    require_prime(p)?;
    let order = p.checked_pow(n + 1).unwrap_or(u64::MAX);
    check_cap(order, DEFAULT_ORDER_CAP)?;
    let pn = p.pow(n);
    let text = format!(
        "gens a, b; rels a^{pn}, b^{p}, b^-1*a*b = a^{};",
        1 + p.pow(n - 1)
    );
    from_presentation(&text, format!("M({p},{n})"))
}

/// Heisenberg group over `Z/p`: `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')`,
/// stored at `a + p b + p^2 c`.
pub fn heisenberg(p: u64) -> Result<Group> {
    require_prime(p)?;
    let p = p as usize;
    let n = p * p * p;
    check_cap(n as u64, DEFAULT_ORDER_CAP)?;
    let split = |x: usize| (x % p, (x / p) % p, x / (p * p));
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let (a, b, c) = split(x);
        for y in 0..n {
            let (a2, b2, c2) = split(y);
            let z = ((a + a2) % p) + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p);
            table.push(z as u32);
        }
    }
    Group::from_table(n, table, format!("Heis({p})"))
}

/// Extraspecial group of order `p^(2m+1)`, built as an iterated central
/// product of `m` groups of order `p^3`. `Plus` uses `D8` (p = 2) or the
/// Heisenberg group (odd p) throughout; `Minus` swaps the last factor for
/// `Q8` or `M(p,2)`.
pub fn extraspecial(p: u64, m: u32, kind: ExtraspecialType) -> Result<Group> {
    extraspecial_with_cap(p, m, kind, DEFAULT_ORDER_CAP)
}

fn extraspecial_with_cap(p: u64, m: u32, kind: ExtraspecialType, cap: usize) -> Result<Group> {
    require_prime(p)?;
    if m == 0 {
        return Err(Error::Precondition("extraspecial groups need m >= 1".into()));
    }
    let order = p.checked_pow(2 * m + 1).unwrap_or(u64::MAX);
    check_cap(order, cap)?;
    let plus = if p == 2 { dihedral(8)? } else { heisenberg(p)? };
    let minus = if p == 2 {
        generalized_quaternion(3)?
    } else {
        modular_group(p, 2)?
    };
    let mut acc = if m == 1 && kind == ExtraspecialType::Minus {
        minus.clone()
    } else {
        plus.clone()
    };
    for i in 2..=m {
        let factor = if i == m && kind == ExtraspecialType::Minus {
            &minus
        } else {
            &plus
        };
        acc = central_product(&acc, factor)?;
    }
    Ok(acc.with_label(format!("ES({p},{m},{kind})")))
}

/// `E * A` with `E = extraspecial(p, m, +)`.
pub fn central_product_ea(p: u64, m: u32, factor: CentralFactor) -> Result<Group> {
    central_product_ea_with_cap(p, m, factor, DEFAULT_ORDER_CAP)
}

fn central_product_ea_with_cap(p: u64, m: u32, factor: CentralFactor, cap: usize) -> Result<Group> {
    require_prime(p)?;
    let spec = FamilySpec::CentralProductEA { p, m, factor };
    check_cap(spec.expected_order().unwrap_or(u64::MAX), cap)?;
    let e = extraspecial_with_cap(p, m, ExtraspecialType::Plus, cap)?;
    let a = match factor {
        CentralFactor::Modular(n) => modular_m(p, n)?,
        CentralFactor::Cyclic(t) => {
            if t < 2 {
                return Err(Error::Precondition(format!("E*C_p^t needs t >= 2, got {t}")));
            }
            cyclic_with_cap(p.pow(t) as usize, cap)?
        }
    };
    let label = format!("{}*{}", e.label(), a.label());
    Ok(central_product(&e, &a)?.with_label(label))
}

pub fn smallgroup_32_8() -> Result<Group> {
    from_presentation(SMALLGROUP_32_8, "SmallGroup(32,8)".into())
}

/// The fourteen groups of order 16 from the bundled presentation file.
pub fn order16_groups() -> Result<Vec<Group>> {
    parse_presentation_file(ORDER16_PRESENTATIONS)?
        .into_iter()
        .map(|(name, p)| Ok(enumerate(&p, DEFAULT_MAX_COSETS)?.with_label(name)))
        .collect()
}

/// All partitions of `k` into non-increasing positive parts.
fn partitions(k: u32) -> Vec<Vec<u32>> {
    fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rem.min(max)).rev() {
            cur.push(part);
            go(rem - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

/// Elementary-divisor types of every abelian group of order `n`.
pub fn abelian_types(n: usize) -> Vec<Vec<usize>> {
    let mut types: Vec<Vec<usize>> = vec![vec![]];
    for (p, k) in crate::arith::factorize(n as u64) {
        let mut next = Vec::new();
        for t in &types {
            for part in partitions(k) {
                let mut t = t.clone();
                t.extend(part.iter().map(|&e| p.pow(e) as usize));
                next.push(t);
            }
        }
        types = next;
    }
    types
}

/// Groups of order 64 that can be built without a catalog: all abelian
/// types, the 2-generator families, and direct and central products.
pub fn order64_constructible() -> Result<Vec<Group>> {
    let mut out = Vec::new();
    for t in abelian_types(64) {
        out.push(abelian_of_type(&t)?);
    }
    out.push(dihedral(64)?);
    out.push(generalized_quaternion(6)?);
    out.push(semidihedral(6)?);
    out.push(modular_m(2, 5)?);
    out.push(central_product_ea(2, 1, CentralFactor::Cyclic(4))?);
    out.push(central_product_ea(2, 2, CentralFactor::Cyclic(2))?);
    out.push(central_product_ea(2, 1, CentralFactor::Modular(3))?);
    let d8 = dihedral(8)?;
    let q8 = generalized_quaternion(3)?;
    let prod = |a: &Group, b: &Group| -> Result<Group> {
        let label = format!("{}x{}", a.label(), b.label());
        Ok(direct_product_with_cap(a, b, DEFAULT_ORDER_CAP)?.with_label(label))
    };
    out.push(prod(&d8, &d8)?);
    out.push(prod(&d8, &q8)?);
    out.push(prod(&q8, &q8)?);
    out.push(prod(&d8, &cyclic(8)?)?);
    out.push(prod(&q8, &cyclic(8)?)?);
    out.push(prod(&d8, &abelian_of_type(&[4, 2])?)?);
    out.push(prod(&q8, &abelian_of_type(&[4, 2])?)?);
    out.push(prod(&d8, &abelian_of_type(&[2, 2, 2])?)?);
    out.push(prod(&q8, &abelian_of_type(&[2, 2, 2])?)?);
    out.push(prod(&dihedral(32)?, &cyclic(2)?)?);
    out.push(prod(&generalized_quaternion(5)?, &cyclic(2)?)?);
    out.push(prod(&semidihedral(5)?, &cyclic(2)?)?);
    out.push(prod(&modular_m(2, 4)?, &cyclic(2)?)?);
    out.push(prod(&dihedral(16)?, &cyclic(4)?)?);
    out.push(prod(&generalized_quaternion(4)?, &cyclic(4)?)?);
    out.push(prod(&modular_m(2, 3)?, &cyclic(4)?)?);
    out.push(prod(&extraspecial(2, 2, ExtraspecialType::Plus)?, &cyclic(2)?)?);
    out.push(prod(&extraspecial(2, 2, ExtraspecialType::Minus)?, &cyclic(2)?)?);
    out.push(prod(&smallgroup_32_8()?, &cyclic(2)?)?);
    out.push(prod(&central_product_ea(2, 1, CentralFactor::Cyclic(2))?, &cyclic(4)?)?);
    Ok(out)
}

/// Deterministic verification corpus of every builtin group of order at most
/// `max_order`, sorted by order and then label.
///
/// Order 16 is covered exactly once, by the bundled catalog of all fourteen
/// groups, and order 64 by [`order64_constructible`]; the families skip both
/// orders.
pub fn builtin_corpus(max_order: usize) -> Result<Vec<Group>> {
    check_cap(max_order as u64, DEFAULT_ORDER_CAP)?;
    let mut out: Vec<Group> = Vec::new();
    let fits = |o: u64| o <= max_order as u64 && o != 16 && o != 64;

    for n in 1..=max_order {
        if fits(n as u64) {
            out.push(cyclic(n)?);
        }
    }
    for n in 2..=max_order.min(CORPUS_ABELIAN_MAX) {
        for t in abelian_types(n) {
            if t.len() > 1 && fits(n as u64) {
                out.push(abelian_of_type(&t)?);
            }
        }
    }
    for two_n in (6..=max_order).step_by(2) {
        if fits(two_n as u64) {
            out.push(dihedral(two_n)?);
        }
    }
    for n in 3..=12 {
        if fits(1 << n) {
            out.push(generalized_quaternion(n)?);
        }
        if n >= 4 && fits(1 << n) {
            out.push(semidihedral(n)?);
        }
    }
    for p in [2u64, 3, 5, 7] {
        for n in 3..=12 {
            if fits(p.pow(n + 1)) {
                out.push(modular_m(p, n)?);
            }
        }
        for m in 1..=3 {
            let o = p.pow(2 * m + 1);
            if fits(o) && o <= CORPUS_EXTRASPECIAL_MAX as u64 {
                out.push(extraspecial(p, m, ExtraspecialType::Plus)?);
                out.push(extraspecial(p, m, ExtraspecialType::Minus)?);
            }
            for t in 2..=6 {
                let spec = FamilySpec::CentralProductEA { p, m, factor: CentralFactor::Cyclic(t) };
                if fits(spec.expected_order().unwrap()) {
                    out.push(spec.build()?);
                }
            }
            for n in 3..=6 {
                let spec = FamilySpec::CentralProductEA { p, m, factor: CentralFactor::Modular(n) };
                if fits(spec.expected_order().unwrap()) {
                    out.push(spec.build()?);
                }
            }
        }
    }
    if max_order >= 32 {
        out.push(smallgroup_32_8()?);
    }
    for (text, label) in MISC_PRESENTATIONS {
        let g = from_presentation(text, label.to_string())?;
        if fits(g.order() as u64) {
            out.push(g);
        }
    }
    let prod = |a: Group, b: Group| -> Result<Group> {
        let label = format!("{}x{}", a.label(), b.label());
        Ok(direct_product_with_cap(&a, &b, DEFAULT_ORDER_CAP)?.with_label(label))
    };
    let d8 = dihedral(8)?;
    let q8 = generalized_quaternion(3)?;
    let s3 = dihedral(6)?.with_label("S3");
    let products: Vec<(Group, Group)> = vec![
        (s3.clone(), cyclic(3)?),
        (d8.clone(), cyclic(3)?),
        (q8.clone(), cyclic(3)?),
        (s3.clone(), s3.clone()),
        (d8.clone(), cyclic(4)?),
        (q8.clone(), cyclic(4)?),
        (d8.clone(), abelian_of_type(&[2, 2])?),
        (q8.clone(), abelian_of_type(&[2, 2])?),
        (dihedral(16)?, cyclic(2)?),
        (generalized_quaternion(4)?, cyclic(2)?),
        (semidihedral(4)?, cyclic(2)?),
        (modular_m(2, 3)?, cyclic(2)?),
        (heisenberg(3)?, cyclic(3)?),
    ];
    for (a, b) in products {
        if fits((a.order() * b.order()) as u64) {
            out.push(prod(a, b)?);
        }
    }
    if max_order >= 16 {
        out.extend(order16_groups()?);
    }
    if max_order >= 64 {
        out.extend(order64_constructible()?);
    }
    out.sort_by(|a, b| (a.order(), a.label()).cmp(&(b.order(), b.label())));
    Ok(out)
}

/// Non-nilpotent and otherwise interesting small groups.
/// Further bundled presentations as `(text, label)` pairs.
pub const MISC_PRESENTATIONS: &[(&str, &str)] = &[
    ("gens a, b, c; rels a^2, b^3, c = a*b, c^3;", "A4"),
    ("gens a, b, c; rels a^2, b^3, c = a*b, c^4;", "S4"),
    ("gens a, b, c; rels a^2, b^3, c = a*b, c^5;", "A5"),
    ("gens a, b; rels a^6, b^2 = a^3, b^-1*a*b = a^-1;", "Dic12"),
    ("gens a, b; rels a^10, b^2 = a^5, b^-1*a*b = a^-1;", "Dic20"),
    ("gens a, b; rels a^7, b^3, b^-1*a*b = a^2;", "C7:C3"),
    ("gens a, b; rels a^5, b^4, b^-1*a*b = a^2;", "F20"),
    ("gens a, b, c; rels a^4, c^3, b^2 = a^2, b^-1*a*b = a^-1, c^-1*a*c = b, c^-1*b*c = a*b;", "SL(2,3)"),
];
