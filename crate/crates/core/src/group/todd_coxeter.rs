//! Todd-Coxeter coset enumeration (HLT strategy) over the trivial subgroup,
//! with immediate coincidence processing and a fixed scanning order so the
//! resulting element numbering is deterministic.

use super::presentation::{letter_gen, letter_inv, Presentation};
use super::FiniteGroup;
use crate::error::{Error, Result};
use std::collections::{BTreeMap, VecDeque};

const UNDEF: u32 = u32::MAX;

struct Enumerator {
    ncols: usize,
    /// row-major coset table, columns 2i (gen i) and 2i+1 (inverse)
    table: Vec<u32>,
    rep: Vec<u32>,
    alive: usize,
    max_cosets: usize,
}

impl Enumerator {
    fn new(ngens: usize, max_cosets: usize) -> Self {
        let ncols = 2 * ngens;
        Enumerator {
            ncols,
            table: vec![UNDEF; ncols],
            rep: vec![0],
            alive: 1,
            max_cosets,
        }
    }

    fn num(&self) -> usize {
        self.rep.len()
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.rep[x as usize] != x {
            let r = self.rep[self.rep[x as usize] as usize];
            self.rep[x as usize] = r;
            x = r;
        }
        x
    }

    fn get(&mut self, c: u32, col: usize) -> u32 {
        let v = self.table[c as usize * self.ncols + col];
        if v == UNDEF {
            UNDEF
        } else {
            let r = self.find(v);
            self.table[c as usize * self.ncols + col] = r;
            r
        }
    }

    fn set(&mut self, c: u32, col: usize, d: u32) {
        self.table[c as usize * self.ncols + col] = d;
        self.table[d as usize * self.ncols + (col ^ 1)] = c;
    }

    fn new_coset(&mut self) -> Result<u32> {
        if self.num() >= self.max_cosets {
            return Err(Error::resource(format!(
                "coset enumeration exceeded budget of {} cosets",
                self.max_cosets
            )));
        }
        let id = self.num() as u32;
        self.rep.push(id);
        self.table.extend(std::iter::repeat(UNDEF).take(self.ncols));
        self.alive += 1;
        Ok(id)
    }

    fn col_of(letter: i32) -> usize {
        2 * letter_gen(letter) + usize::from(letter_inv(letter))
    }

    fn inv_col_of(letter: i32) -> usize {
        Self::col_of(letter) ^ 1
    }

    /// Merge the coincidence classes of a and b, propagating consequences.
    fn coincide(&mut self, a: u32, b: u32) {
        let mut queue = VecDeque::new();
        queue.push_back((a, b));
        while let Some((a, b)) = queue.pop_front() {
            let a = self.find(a);
            let b = self.find(b);
            if a == b {
                continue;
            }
            let (live, dead) = if a < b { (a, b) } else { (b, a) };
            self.rep[dead as usize] = live;
            self.alive -= 1;
            for col in 0..self.ncols {
                let dv = self.table[dead as usize * self.ncols + col];
                if dv == UNDEF {
                    continue;
                }
                let dv = self.find(dv);
                let lv = self.get(live, col);
                if lv == UNDEF {
                    // right multiplication is injective: an existing preimage
                    // of dv under this column must coincide with live
                    let mirror = self.table[dv as usize * self.ncols + (col ^ 1)];
                    if mirror != UNDEF {
                        let mu = self.find(mirror);
                        if mu != live && mu != dead {
                            queue.push_back((live, mu));
                        }
                    }
                    self.set(live, col, dv);
                } else if lv != dv {
                    queue.push_back((lv, dv));
                }
            }
        }
    }

    /// Scan relator `w` at coset `alpha`, defining cosets to fill gaps.
    fn scan_and_fill(&mut self, alpha: u32, w: &[i32]) -> Result<()> {
        let n = w.len();
        loop {
            let alpha = self.find(alpha);
            // forward
            let mut f = alpha;
            let mut i = 0usize;
            while i < n {
                let next = self.get(f, Self::col_of(w[i]));
                if next == UNDEF {
                    break;
                }
                f = next;
                i += 1;
            }
            if i == n {
                if f != alpha {
                    self.coincide(f, alpha);
                }
                return Ok(());
            }
            // backward
            let mut b = alpha;
            let mut j = n;
            while j > i {
                let prev = self.get(b, Self::inv_col_of(w[j - 1]));
                if prev == UNDEF {
                    break;
                }
                b = prev;
                j -= 1;
            }
            if j == i + 1 {
                // deduction closes the scan
                self.set(f, Self::col_of(w[i]), b);
                return Ok(());
            }
            if j == i {
                // scan closed from both sides; forces f = b
                if f != b {
                    self.coincide(f, b);
                }
                return Ok(());
            }
            // gap of length > 1: define one new coset and rescan
            let c = self.new_coset()?;
            self.set(f, Self::col_of(w[i]), c);
        }
    }
}

/// Enumerate the group presented by `p` (coset enumeration on the trivial
/// subgroup) and extract its multiplication table. Errors with a resource
/// verdict if the table does not close within `max_cosets` — which is not a
/// claim that the group is infinite.
pub fn todd_coxeter(p: &Presentation, max_cosets: usize) -> Result<FiniteGroup> {
    let mut e = Enumerator::new(p.num_generators, max_cosets);
    let mut alpha = 0u32;
    while (alpha as usize) < e.num() {
        if e.find(alpha) != alpha {
            alpha += 1;
            continue;
        }
        for rel in &p.relators {
            e.scan_and_fill(alpha, rel)?;
            if e.find(alpha) != alpha {
                break;
            }
        }
        if e.find(alpha) != alpha {
            alpha += 1;
            continue;
        }
        // complete the row so enumeration always makes progress
        for col in 0..e.ncols {
            if e.find(alpha) != alpha {
                break;
            }
            if e.get(alpha, col) == UNDEF {
                let c = e.new_coset()?;
                e.set(alpha, col, c);
            }
        }
        alpha += 1;
    }
    // compact: live cosets in index order
    let total = e.num();
    let mut newid = vec![usize::MAX; total];
    let mut live = Vec::new();
    for c in 0..total as u32 {
        if e.find(c) == c {
            newid[c as usize] = live.len();
            live.push(c);
        }
    }
    let n = live.len();
    // generator action on live cosets
    let ncols = e.ncols;
    let mut action = vec![0usize; n * ncols];
    for (li, &c) in live.iter().enumerate() {
        for col in 0..ncols {
            let v = e.get(c, col);
            if v == UNDEF {
                return Err(Error::internal("incomplete coset table after closure"));
            }
            action[li * ncols + col] = newid[e.find(v) as usize];
        }
    }
    // words from coset 0 by BFS over columns in fixed order
    let mut word: Vec<Option<Vec<usize>>> = vec![None; n];
    word[0] = Some(Vec::new());
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for col in 0..ncols {
            let y = action[x * ncols + col];
            if word[y].is_none() {
                let mut w = word[x].clone().unwrap();
                w.push(col);
                word[y] = Some(w);
                queue.push_back(y);
            }
        }
    }
    let mut table = vec![0usize; n * n];
    for i in 0..n {
        for (j, w) in word.iter().enumerate() {
            let mut c = i;
            for &col in w.as_ref().unwrap() {
                c = action[c * ncols + col];
            }
            table[i * n + j] = c;
        }
    }
    let g = FiniteGroup::from_table(table, n)?;
    let mut labels = BTreeMap::new();
    for gi in 0..p.num_generators {
        let name = ((b'a' + gi as u8) as char).to_string();
        labels.insert(name, action[2 * gi]);
    }
    Ok(g.with_labels(labels))
}

#[cfg(test)]
mod tests {
    use super::super::constructors::*;
    use super::super::isomorphism::is_isomorphic;
    use super::super::presentation::Presentation;
    use super::*;

    #[test]
    fn cyclic_five() {
        let p = Presentation::parse("gens 1\na^5\n").unwrap();
        let g = todd_coxeter(&p, 1000).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.order_multiset(), vec![1, 5, 5, 5, 5]);
    }

    #[test]
    fn smallgroup_16_4_matches_semidirect() {
        // <a,b | a^4, b^4, b^-1 a b = a^-1>
        let p = Presentation::parse("gens 2\na^4\nb^4\nB a b a\n").unwrap();
        let g = todd_coxeter(&p, 10_000).unwrap();
        assert_eq!(g.order(), 16);
        let h = make_semidirect(4, 4, 3).unwrap();
        assert!(is_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn binary_tetrahedral_is_sl23() {
        // <a,b | a^3 = b^3 = (ab)^2>
        let p = Presentation::parse("gens 2\na^3 B^3\na^3 B A B A\n").unwrap();
        let g = todd_coxeter(&p, 10_000).unwrap();
        assert_eq!(g.order(), 24);
        let invs = g.element_orders().iter().filter(|&&o| o == 2).count();
        assert_eq!(invs, 1);
        let sl23 = make_sl2(3).unwrap();
        assert!(is_isomorphic(&g, &sl23).unwrap());
    }

    #[test]
    fn budget_exhaustion_is_resource_error() {
        let p = Presentation::parse("gens 2\na^2 b^2 A B\n").unwrap(); // infinite-ish
        match todd_coxeter(&p, 50) {
            Err(Error::Resource(_)) => {}
            other => panic!("expected resource error, got {other:?}"),
        }
    }

    #[test]
    fn presentation_constructors_agree() {
        let pairs: Vec<(Presentation, FiniteGroup)> = vec![
            (
                Presentation::parse("gens 1\na^7\n").unwrap(),
                make_cyclic(7).unwrap(),
            ),
            (
                Presentation::parse("gens 2\na^6\nb^2\nb a b a\n").unwrap(),
                make_dihedral(6).unwrap(),
            ),
            (
                // DC_3: x^6 = 1, y^2 = x^3, y^-1 x y = x^-1
                Presentation::parse("gens 2\na^6\nb^2 A^3\nB a b a\n").unwrap(),
                make_dicyclic(3).unwrap(),
            ),
        ];
        for (p, direct) in pairs {
            let g = todd_coxeter(&p, 10_000).unwrap();
            assert_eq!(g.order(), direct.order());
            assert!(is_isomorphic(&g, &direct).unwrap());
        }
    }
}
