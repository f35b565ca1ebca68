//! Faithful embeddings into special orthogonal groups.
//!
//! A real orthogonal representation decomposes into irreducible orthogonal
//! summands of three kinds: a real (FS = +1) irreducible of degree d, the
//! realification of a complex-conjugate pair (FS = 0, real degree 2d), or a
//! doubled quaternionic irreducible (FS = -1, real degree 2d). Only the
//! first kind can contribute a nontrivial determinant (a +-1-valued linear
//! character); the other two have real determinant 1. `G` embeds in SO(n)
//! iff some multiset of summands has total degree exactly n, trivial
//! determinant product, and trivial joint kernel. (Exact-n equals at-most-n
//! because the trivial summand pads freely.)

use super::indicators::{determinant_character, fs_indicator, kernel};
use super::CharacterTable;
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

#[derive(Clone, Debug)]
pub struct OrthogonalSummand {
    /// real degree
    pub degree: usize,
    pub kernel: ElemSet,
    /// classes where the real determinant is -1 (empty unless FS = +1)
    pub det_neg: Vec<bool>,
}

#[derive(Debug)]
pub struct OrthogonalSummands {
    pub summands: Vec<OrthogonalSummand>,
    num_classes: usize,
}

impl OrthogonalSummands {
    pub fn new(g: &FiniteGroup, t: &CharacterTable) -> Result<Self> {
        let k = t.num_classes();
        let mut used = vec![false; t.rows.len()];
        let mut summands = Vec::new();
        for i in 0..t.rows.len() {
            if used[i] {
                continue;
            }
            used[i] = true;
            let fs = fs_indicator(g, t, i)?;
            let ker = kernel(g, t, i);
            match fs {
                1 => {
                    let det = determinant_character(g, t, i)?;
                    let det_neg = det
                        .iter()
                        .map(|v| match v.as_integer() {
                            Some(1) => Ok(false),
                            Some(-1) => Ok(true),
                            _ => Err(Error::internal(
                                "real irreducible with non-real determinant",
                            )),
                        })
                        .collect::<Result<Vec<bool>>>()?;
                    summands.push(OrthogonalSummand {
                        degree: t.rows[i].degree,
                        kernel: ker,
                        det_neg,
                    });
                }
                -1 => {
                    summands.push(OrthogonalSummand {
                        degree: 2 * t.rows[i].degree,
                        kernel: ker,
                        det_neg: vec![false; k],
                    });
                }
                _ => {
                    // pair with the conjugate character
                    let conj: Vec<_> = t.rows[i].values.iter().map(|v| v.conj()).collect();
                    let j = t
                        .rows
                        .iter()
                        .position(|r| r.values == conj)
                        .ok_or_else(|| Error::internal("conjugate character missing"))?;
                    used[j] = true;
                    summands.push(OrthogonalSummand {
                        degree: 2 * t.rows[i].degree,
                        kernel: ker,
                        det_neg: vec![false; k],
                    });
                }
            }
        }
        Ok(OrthogonalSummands {
            summands,
            num_classes: k,
        })
    }

    /// Does some multiset of summands give a faithful degree-n special
    /// orthogonal representation?
    pub fn embeds_in_so(&self, g: &FiniteGroup, n: usize) -> bool {
        self.witness_in_so(g, n).is_some()
    }

    /// A witnessing multiset, as the multiplicity of each summand, if one
    /// exists.
    pub fn witness_in_so(&self, g: &FiniteGroup, n: usize) -> Option<Vec<usize>> {
        let parity = vec![false; self.num_classes];
        let ker = ElemSet::full(g.order());
        let mut counts = vec![0usize; self.summands.len()];
        if self.search(0, n, &parity, &ker, &mut counts) {
            Some(counts)
        } else {
            None
        }
    }

    fn search(
        &self,
        idx: usize,
        rem: usize,
        parity: &[bool],
        ker: &ElemSet,
        counts: &mut [usize],
    ) -> bool {
        if rem == 0 {
            counts[idx..].fill(0);
            return parity.iter().all(|&b| !b) && ker.len() == 1;
        }
        if idx == self.summands.len() {
            return false;
        }
        let s = &self.summands[idx];
        // count = 0
        counts[idx] = 0;
        if self.search(idx + 1, rem, parity, ker, counts) {
            return true;
        }
        let mut parity = parity.to_vec();
        let mut ker = ker.clone();
        let mut used = 0usize;
        while used + s.degree <= rem {
            used += s.degree;
            for (p, &d) in parity.iter_mut().zip(&s.det_neg) {
                *p ^= d;
            }
            ker.intersect_with(&s.kernel);
            counts[idx] = used / s.degree;
            if self.search(idx + 1, rem - used, &parity, &ker, counts) {
                return true;
            }
        }
        counts[idx] = 0;
        false
    }

    /// Degrees of the summands picked by a witness multiset, sorted
    /// descending (for reports).
    pub fn witness_degrees(&self, counts: &[usize]) -> Vec<usize> {
        let mut out = Vec::new();
        for (s, &c) in self.summands.iter().zip(counts) {
            for _ in 0..c {
                out.push(s.degree);
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

/// One-shot query; builds the character table internally.
pub fn embeds_in_so(g: &FiniteGroup, n: usize) -> Result<bool> {
    let t = CharacterTable::new(g)?;
    Ok(OrthogonalSummands::new(g, &t)?.embeds_in_so(g, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::constructors::*;

    #[test]
    fn cyclic_groups_in_the_plane() {
        for n in 1..=8 {
            let g = make_cyclic(n).unwrap();
            assert!(embeds_in_so(&g, 2).unwrap(), "C{n} in SO(2)");
        }
        // but not in SO(1), except the trivial group
        assert!(embeds_in_so(&make_cyclic(1).unwrap(), 1).unwrap());
        assert!(!embeds_in_so(&make_cyclic(2).unwrap(), 1).unwrap());
        assert!(!embeds_in_so(&make_cyclic(3).unwrap(), 1).unwrap());
    }

    #[test]
    fn klein_four_needs_dimension_three() {
        let v4 = direct_product(&make_cyclic(2).unwrap(), &make_cyclic(2).unwrap()).unwrap();
        assert!(!embeds_in_so(&v4, 2).unwrap());
        assert!(embeds_in_so(&v4, 3).unwrap());
    }

    #[test]
    fn polyhedral_rotation_groups() {
        assert!(embeds_in_so(&make_alternating4().unwrap(), 3).unwrap());
        assert!(embeds_in_so(&make_symmetric4().unwrap(), 3).unwrap());
        assert!(embeds_in_so(&make_alternating5().unwrap(), 3).unwrap());
        for n in 3..=8 {
            assert!(embeds_in_so(&make_dihedral(n).unwrap(), 3).unwrap());
        }
    }

    #[test]
    fn quaternion_group_needs_dimension_four() {
        let q8 = make_dicyclic(2).unwrap();
        assert!(!embeds_in_so(&q8, 3).unwrap());
        assert!(embeds_in_so(&q8, 4).unwrap());
    }

    #[test]
    fn monotone_in_dimension() {
        let g = make_dicyclic(3).unwrap();
        let t = CharacterTable::new(&g).unwrap();
        let s = OrthogonalSummands::new(&g, &t).unwrap();
        let mut seen = false;
        for n in 1..=10 {
            let now = s.embeds_in_so(&g, n);
            assert!(!seen || now, "monotone at {n}");
            seen |= now;
        }
        assert!(seen);
    }

    #[test]
    fn odd_metacyclic_minimal_dimension() {
        // the order-21 Frobenius group: smallest faithful characters are the
        // complex-conjugate pair of degree 3, so SO(6) is the first hit
        let g = make_semidirect(7, 3, 2).unwrap();
        let t = CharacterTable::new(&g).unwrap();
        let s = OrthogonalSummands::new(&g, &t).unwrap();
        for n in 0..6 {
            assert!(!s.embeds_in_so(&g, n), "SO({n})");
        }
        assert!(s.embeds_in_so(&g, 6));
    }

    #[test]
    fn dihedral_in_so2_fails_but_o2_style_in_so3() {
        // D_n needs a reflection, so SO(2) is impossible for n >= 3
        let d5 = make_dihedral(5).unwrap();
        assert!(!embeds_in_so(&d5, 2).unwrap());
        assert!(embeds_in_so(&d5, 3).unwrap());
    }
}
