//! Subgroup enumeration, the subgroup lattice with its Moebius function,
//! and the special-purpose index-2 subgroup list.

use super::FiniteGroup;
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use std::collections::{BTreeSet, HashMap};

/// All subgroups, as element sets, sorted by (size, elements). Generated by
/// closing the cyclic subgroups under joins; errors if the count exceeds
/// `max_subgroups`.
pub fn all_subgroups(g: &FiniteGroup, max_subgroups: usize) -> Result<Vec<ElemSet>> {
    let n = g.order();
    let mut cyclics: BTreeSet<Vec<usize>> = BTreeSet::new();
    for x in 0..n {
        cyclics.insert(g.closure(&[x]).to_vec());
    }
    let cyclics: Vec<Vec<usize>> = cyclics.into_iter().collect();
    let mut known: BTreeSet<Vec<usize>> = cyclics.iter().cloned().collect();
    let mut frontier: Vec<Vec<usize>> = cyclics.clone();
    while let Some(h) = frontier.pop() {
        for z in &cyclics {
            if z.iter().all(|e| h.binary_search(e).is_ok()) {
                continue;
            }
            let mut gens = h.clone();
            gens.extend_from_slice(z);
            let c = g.closure(&gens).to_vec();
            if known.insert(c.clone()) {
                if known.len() > max_subgroups {
                    return Err(Error::resource(format!(
                        "subgroup enumeration exceeded {max_subgroups} subgroups"
                    )));
                }
                frontier.push(c);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = known.into_iter().collect();
    out.sort_by_key(|v| (v.len(), v.clone()));
    Ok(out
        .into_iter()
        .map(|v| ElemSet::from_iter(n, v))
        .collect())
}

/// The subgroup lattice with the Moebius function mu(H, G) for every
/// subgroup H, plus the partition of subgroups into conjugacy orbits
/// (conjugate subgroups share their mu value).
pub struct SubgroupLattice {
    /// sorted by (size, elements); the last entry is the whole group
    pub subgroups: Vec<ElemSet>,
    pub mu: Vec<i64>,
    pub orbit_of: Vec<usize>,
    /// one subgroup index per conjugacy orbit
    pub orbit_reps: Vec<usize>,
    pub orbit_sizes: Vec<usize>,
}

impl SubgroupLattice {
    pub fn new(g: &FiniteGroup, max_subgroups: usize) -> Result<Self> {
        let subs = all_subgroups(g, max_subgroups)?;
        let m = subs.len();
        // mu(G, G) = 1; mu(H, G) = -sum over K with H < K <= G of mu(K, G).
        // Strict containers of H are strictly larger, hence later in the
        // (size, elements) order.
        let mut mu = vec![0i64; m];
        mu[m - 1] = 1;
        for i in (0..m - 1).rev() {
            let mut s = 0i64;
            for j in i + 1..m {
                if subs[i].is_subset(&subs[j]) {
                    s += mu[j];
                }
            }
            mu[i] = -s;
        }
        // conjugacy orbits of subgroups
        let index_of: HashMap<Vec<usize>, usize> = subs
            .iter()
            .enumerate()
            .map(|(i, s)| (s.to_vec(), i))
            .collect();
        let mut orbit_of = vec![usize::MAX; m];
        let mut orbit_reps = Vec::new();
        let mut orbit_sizes = Vec::new();
        for i in 0..m {
            if orbit_of[i] != usize::MAX {
                continue;
            }
            let oid = orbit_reps.len();
            orbit_reps.push(i);
            let mut count = 0usize;
            let mut stack = vec![i];
            orbit_of[i] = oid;
            while let Some(k) = stack.pop() {
                count += 1;
                for t in 0..g.order() {
                    let conj: Vec<usize> =
                        subs[k].iter().map(|x| g.conjugate(t, x)).collect();
                    let mut conj = conj;
                    conj.sort_unstable();
                    let j = *index_of
                        .get(&conj)
                        .expect("conjugate of a subgroup is a subgroup");
                    if orbit_of[j] == usize::MAX {
                        orbit_of[j] = oid;
                        stack.push(j);
                    }
                }
            }
            orbit_sizes.push(count);
        }
        Ok(SubgroupLattice {
            subgroups: subs,
            mu,
            orbit_of,
            orbit_reps,
            orbit_sizes,
        })
    }
}

/// All index-2 subgroups. These are exactly the preimages of hyperplanes in
/// the elementary abelian 2-quotient G / K, where K is generated by the
/// derived subgroup together with all squares.
pub fn index2_subgroups(g: &FiniteGroup) -> Vec<ElemSet> {
    let n = g.order();
    let mut gens: Vec<usize> = g.derived_subgroup().to_vec();
    for x in 0..n {
        gens.push(g.mul(x, x));
    }
    let k = g.closure(&gens);
    let (q, coset_of) = g.quotient(&k).expect("K is normal (verbal subgroup)");
    let qn = q.order();
    if qn == 1 {
        return Vec::new();
    }
    debug_assert!(qn.is_power_of_two());
    let d = qn.trailing_zeros() as usize;
    let basis = q.greedy_generators();
    debug_assert_eq!(basis.len(), d);
    // F2-coordinates of every quotient element relative to the basis
    let mut elem_of = vec![0usize; qn];
    let mut coords = vec![0u32; qn];
    for mask in 1u32..(1 << d) {
        let b = mask.trailing_zeros() as usize;
        let prev = elem_of[(mask ^ (1 << b)) as usize & (qn - 1)];
        let e = q.mul(prev, basis[b]);
        elem_of[mask as usize] = e;
        coords[e] = mask;
    }
    let mut out = Vec::new();
    for functional in 1u32..(1 << d) {
        let mut s = ElemSet::empty(n);
        for x in 0..n {
            if (coords[coset_of[x]] & functional).count_ones() % 2 == 0 {
                s.insert(x);
            }
        }
        debug_assert_eq!(s.len(), n / 2);
        out.push(s);
    }
    out.sort_by_key(|s| s.to_vec());
    out
}

#[cfg(test)]
mod tests {
    use super::super::constructors::*;
    use super::*;

    #[test]
    fn subgroup_counts() {
        let s3 = make_dihedral(3).unwrap();
        assert_eq!(all_subgroups(&s3, 1000).unwrap().len(), 6);
        let d4 = make_dihedral(4).unwrap();
        assert_eq!(all_subgroups(&d4, 1000).unwrap().len(), 10);
        let q8 = make_dicyclic(2).unwrap();
        assert_eq!(all_subgroups(&q8, 1000).unwrap().len(), 6);
        let c12 = make_cyclic(12).unwrap();
        assert_eq!(all_subgroups(&c12, 1000).unwrap().len(), 6);
        let a4 = make_alternating4().unwrap();
        assert_eq!(all_subgroups(&a4, 1000).unwrap().len(), 10);
    }

    #[test]
    fn subgroup_budget_is_resource_error() {
        let d4 = make_dihedral(4).unwrap();
        match all_subgroups(&d4, 5) {
            Err(Error::Resource(_)) => {}
            other => panic!("expected resource error, got {:?}", other.map(|v| v.len())),
        }
    }

    #[test]
    fn moebius_values() {
        // mu(1, C_p) = -1
        let c5 = make_cyclic(5).unwrap();
        let l = SubgroupLattice::new(&c5, 100).unwrap();
        assert_eq!(l.mu, vec![-1, 1]);
        // mu(1, C_{p^2}) = 0 through the middle subgroup
        let c9 = make_cyclic(9).unwrap();
        let l = SubgroupLattice::new(&c9, 100).unwrap();
        assert_eq!(l.mu, vec![0, -1, 1]);
        // Klein four group: mu(1, G) = 2
        let v4 = direct_product(&make_cyclic(2).unwrap(), &make_cyclic(2).unwrap()).unwrap();
        let l = SubgroupLattice::new(&v4, 100).unwrap();
        assert_eq!(l.subgroups.len(), 5);
        assert_eq!(l.mu[0], 2);
        assert_eq!(l.mu[4], 1);
    }

    #[test]
    fn conjugate_subgroups_share_orbit() {
        let s4 = make_symmetric4().unwrap();
        let l = SubgroupLattice::new(&s4, 1000).unwrap();
        assert_eq!(l.subgroups.len(), 30);
        assert_eq!(l.orbit_reps.len(), 11);
        assert_eq!(l.orbit_sizes.iter().sum::<usize>(), 30);
        // conjugate subgroups get equal mu
        for (i, &o) in l.orbit_of.iter().enumerate() {
            assert_eq!(l.mu[i], l.mu[l.orbit_reps[o]]);
        }
    }

    #[test]
    fn index_two_subgroups() {
        let s3 = make_dihedral(3).unwrap();
        let subs = index2_subgroups(&s3);
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].len(), 3);
        let d4 = make_dihedral(4).unwrap();
        assert_eq!(index2_subgroups(&d4).len(), 3);
        let a4 = make_alternating4().unwrap();
        assert!(index2_subgroups(&a4).is_empty());
        let c4 = make_cyclic(4).unwrap();
        assert_eq!(index2_subgroups(&c4).len(), 1);
        // each really is a subgroup of index 2
        for s in index2_subgroups(&d4) {
            let (h, _) = d4.subgroup(&s).unwrap();
            assert_eq!(h.order(), 4);
        }
    }
}
