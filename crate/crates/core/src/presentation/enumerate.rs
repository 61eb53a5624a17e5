//! HLT coset enumeration over the trivial subgroup, with immediate
//! coincidence processing through a union-find forwarding array.

use std::collections::VecDeque;

use super::{Letter, Presentation};
use crate::group::Group;
use crate::{Error, Result};

pub const DEFAULT_MAX_COSETS: usize = 65_536;

const UNDEF: u32 = u32::MAX;

struct CosetTable {
    cols: usize,
    entries: Vec<u32>,
    /// `forward[c] == c` for live cosets; otherwise a smaller coset it merged into.
    forward: Vec<u32>,
    limit: usize,
}

impl CosetTable {
    fn new(ngens: usize, limit: usize) -> Self {
        let cols = 2 * ngens;
        CosetTable {
            cols,
            entries: vec![UNDEF; cols],
            forward: vec![0],
            limit,
        }
    }

    fn len(&self) -> usize {
        self.forward.len()
    }

    #[inline]
    fn get(&self, c: usize, x: usize) -> u32 {
        self.entries[c * self.cols + x]
    }

    #[inline]
    fn set(&mut self, c: usize, x: usize, v: u32) {
        self.entries[c * self.cols + x] = v;
    }

    fn is_live(&self, c: usize) -> bool {
        self.forward[c] as usize == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<()> {
        let d = self.len();
        if d >= self.limit {
            return Err(Error::CosetLimit { limit: self.limit });
        }
        self.entries.extend(std::iter::repeat_n(UNDEF, self.cols));
        self.forward.push(d as u32);
        self.set(c, x, d as u32);
        self.set(d, x ^ 1, c as u32);
        Ok(())
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.forward[r] as usize != r {
            r = self.forward[r] as usize;
        }
        let mut cur = c;
        while self.forward[cur] as usize != r {
            let next = self.forward[cur] as usize;
            self.forward[cur] = r as u32;
            cur = next;
        }
        r
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut VecDeque<usize>) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.forward[hi] = lo as u32;
            queue.push_back(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = VecDeque::new();
        self.merge(a, b, &mut queue);
        while let Some(dead) = queue.pop_front() {
            for x in 0..self.cols {
                let d = self.get(dead, x);
                if d == UNDEF {
                    continue;
                }
                let d = d as usize;
                if self.get(d, x ^ 1) == dead as u32 {
                    self.set(d, x ^ 1, UNDEF);
                }
                let mu = self.rep(dead);
                let nu = self.rep(d);
                let mu_x = self.get(mu, x);
                let nu_xi = self.get(nu, x ^ 1);
                if mu_x != UNDEF {
                    self.merge(nu, mu_x as usize, &mut queue);
                } else if nu_xi != UNDEF {
                    self.merge(mu, nu_xi as usize, &mut queue);
                } else {
                    self.set(mu, x, nu as u32);
                    self.set(nu, x ^ 1, mu as u32);
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, word: &[usize]) -> Result<()> {
        let r = word.len();
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, r);
        loop {
            // forward scan over word[i..j]
            while i < j && self.get(f, word[i]) != UNDEF {
                f = self.get(f, word[i]) as usize;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            // backward scan
            while j > i && self.get(b, word[j - 1] ^ 1) != UNDEF {
                b = self.get(b, word[j - 1] ^ 1) as usize;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            } else if j == i + 1 {
                self.set(f, word[i], b as u32);
                self.set(b, word[i] ^ 1, f as u32);
                return Ok(());
            } else {
                self.define(f, word[i])?;
            }
        }
    }
}

/// Enumerates the cosets of the trivial subgroup and returns the resulting
/// group (its regular representation as a Cayley table).
pub fn enumerate(p: &Presentation, max_cosets: usize) -> Result<Group> {
    enumerate_with_images(p, max_cosets).map(|(g, _)| g)
}

/// Like [`enumerate`], also returning the element index of each generator.
pub fn enumerate_with_images(p: &Presentation, max_cosets: usize) -> Result<(Group, Vec<usize>)> {
    let ngens = p.generators().len();
    let rels: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .map(|w| w.iter().map(|l: &Letter| l.column()).collect())
        .collect();
    let mut t = CosetTable::new(ngens, max_cosets.max(1));

    let mut alpha = 0;
    while alpha < t.len() {
        for rel in &rels {
            if !t.is_live(alpha) {
                break;
            }
            t.scan_and_fill(alpha, rel)?;
        }
        if t.is_live(alpha) {
            for x in 0..t.cols {
                if t.get(alpha, x) == UNDEF {
                    t.define(alpha, x)?;
                }
            }
        }
        alpha += 1;
    }

    // Renumber live cosets breadth-first from the identity coset.
    let mut new_index = vec![usize::MAX; t.len()];
    let mut order = vec![0usize];
    let mut parent: Vec<(usize, usize)> = vec![(0, 0)];
    new_index[0] = 0;
    let mut k = 0;
    while k < order.len() {
        let c = order[k];
        for x in 0..t.cols {
            let d = t.rep(t.get(c, x) as usize);
            if new_index[d] == usize::MAX {
                new_index[d] = order.len();
                order.push(d);
                parent.push((k, x));
            }
        }
        k += 1;
    }
    let n = order.len();
    let mut action = vec![0usize; n * t.cols];
    for (ni, &c) in order.iter().enumerate() {
        for x in 0..t.cols {
            let d = t.rep(t.get(c, x) as usize);
            action[ni * t.cols + x] = new_index[d];
        }
    }

    // table[c][d] traces the word of coset d from coset c.
    let mut table = vec![0u32; n * n];
    for c in 0..n {
        table[c * n] = c as u32;
        for d in 1..n {
            let (pd, x) = parent[d];
            let via = table[c * n + pd] as usize;
            table[c * n + d] = action[via * t.cols + x] as u32;
        }
    }
    let images = (0..ngens).map(|g| action[2 * g]).collect();
    let group = Group::from_table(n, table, p.to_string())?;
    Ok((group, images))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_presentation;

    fn enum_text(s: &str) -> (Group, Vec<usize>) {
        enumerate_with_images(&parse_presentation(s).unwrap(), DEFAULT_MAX_COSETS).unwrap()
    }

    #[test]
    fn cyclic_orders() {
        for n in 1..=64 {
            let (g, _) = enum_text(&format!("gens a; rels a^{n};"));
            assert_eq!(g.order(), n);
            assert!(g.is_cyclic());
        }
    }

    #[test]
    fn quaternion_family() {
        let (q8, im) = enum_text("gens a,b; rels a^4, b^2 = a^2, b^-1*a*b = a^-1;");
        assert_eq!(q8.order(), 8);
        let (a, b) = (im[0], im[1]);
        assert_eq!(q8.mul(b, b), q8.pow(a, 2));
        let (q16, im) = enum_text("gens a,b; rels a^8, b^2 = a^4, b^-1*a*b = a^-1;");
        assert_eq!(q16.order(), 16);
        assert_eq!(q16.element_order(im[0]).unwrap(), 8);
    }

    #[test]
    fn degenerate_collapses_to_trivial() {
        let (g, _) = enum_text("gens a,b; rels a, b^3, a*b = b^2;");
        assert_eq!(g.order(), 1);
        let (g, _) = enum_text("gens a,b; rels a^2, b^3, a*b=b*a, a = b;");
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn coset_limit() {
        let p = parse_presentation("gens a,b; rels a^2, b^2;").unwrap();
        assert_eq!(enumerate(&p, 500).unwrap_err(), Error::CosetLimit { limit: 500 });
        let p = parse_presentation("gens a; rels a^100;").unwrap();
        assert!(matches!(enumerate(&p, 50), Err(Error::CosetLimit { limit: 50 })));
    }

    #[test]
    fn non_abelian_presentations() {
        let (a4, im) = enum_text("gens a,b,c; rels a^2, b^3, c = a*b, c^3;");
        assert_eq!(a4.order(), 12);
        let p = parse_presentation("gens a,b,c; rels a^2, b^3, c = a*b, c^3;").unwrap();
        assert!(p.is_satisfied_by(&a4, &im));
        let (a5, _) = enum_text("gens a,b,c; rels a^2, b^3, c = a*b, c^5;");
        assert_eq!(a5.order(), 60);
        assert!(a5.commutator_subgroup().size() == 60);
    }
}
