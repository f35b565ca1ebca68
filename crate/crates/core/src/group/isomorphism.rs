//! Isomorphism testing: cheap invariant screening first, then a
//! generator-image backtracking search. Also abelian invariants (computed by
//! element counting, no structure theory needed) and automorphism groups.

use super::conjugacy::ConjugacyData;
use super::FiniteGroup;
use crate::error::Result;

/// Elementary divisors of the abelianization G / [G, G], as prime powers in
/// ascending order (e.g. `[2, 4]` for C2 x C4, `[3, 3]` for C3 x C3).
pub fn abelian_invariants(g: &FiniteGroup) -> Vec<usize> {
    let der = g.derived_subgroup();
    let (a, _) = g
        .quotient(&der)
        .expect("derived subgroup is normal");
    let n = a.order();
    let mut invs = Vec::new();
    let mut rem = n;
    let mut p = 2usize;
    while rem > 1 {
        if rem % p != 0 {
            p += 1;
            continue;
        }
        let mut ppart = 1usize;
        while rem % p == 0 {
            rem /= p;
            ppart *= p;
        }
        // sigma[j] = log_p #{x : x^{p^j} = 1}; the number of cyclic factors
        // of order exactly p^j is (sigma[j]-sigma[j-1]) - (sigma[j+1]-sigma[j])
        let mut sigma = vec![0usize];
        let mut pj = 1usize;
        loop {
            pj *= p;
            let count = (0..n).filter(|&x| pj % a.order_of(x) == 0).count();
            let mut e = 0usize;
            let mut c = count;
            while c > 1 {
                debug_assert_eq!(c % p, 0);
                c /= p;
                e += 1;
            }
            sigma.push(e);
            if count == ppart {
                break;
            }
        }
        for j in 1..sigma.len() {
            let ge_j = sigma[j] - sigma[j - 1];
            let ge_j1 = if j + 1 < sigma.len() {
                sigma[j + 1] - sigma[j]
            } else {
                0
            };
            for _ in 0..ge_j - ge_j1 {
                invs.push(p.pow(j as u32));
            }
        }
        p += 1;
    }
    invs.sort_unstable();
    invs
}

/// Sizes of the derived series G > G' > G'' > .. until it stabilizes.
pub fn derived_series_sizes(g: &FiniteGroup) -> Vec<usize> {
    let mut sizes = vec![g.order()];
    let mut current = g.clone();
    loop {
        let der = current.derived_subgroup();
        if der.len() == *sizes.last().unwrap() {
            break;
        }
        sizes.push(der.len());
        if der.len() == 1 {
            break;
        }
        let (sub, _) = current.subgroup(&der).expect("derived subgroup is closed");
        current = sub;
    }
    sizes
}

#[derive(Debug, PartialEq, Eq)]
struct Invariants {
    order: usize,
    order_multiset: Vec<usize>,
    class_sizes: Vec<usize>,
    abelian: Vec<usize>,
    center: usize,
    derived_series: Vec<usize>,
}

fn invariants(g: &FiniteGroup, classes: &ConjugacyData) -> Invariants {
    Invariants {
        order: g.order(),
        order_multiset: g.order_multiset(),
        class_sizes: classes.sizes_sorted(),
        abelian: abelian_invariants(g),
        center: g.center().len(),
        derived_series: derived_series_sizes(g),
    }
}

/// Build the hom determined by `gens[i] -> imgs[i]` on the subgroup the
/// generators span, by breadth-first closure. Returns the (domain, map)
/// pair, or None if the images are inconsistent or the map not injective.
fn hom_on_closure(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    imgs: &[usize],
) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut map = vec![usize::MAX; g.order()];
    let mut used = vec![false; h.order()];
    map[0] = 0;
    used[0] = true;
    let mut dom = vec![0usize];
    let mut qi = 0usize;
    while qi < dom.len() {
        let x = dom[qi];
        qi += 1;
        for (&gg, &ih) in gens.iter().zip(imgs) {
            let y = g.mul(x, gg);
            let iy = h.mul(map[x], ih);
            if map[y] == usize::MAX {
                if used[iy] {
                    return None;
                }
                map[y] = iy;
                used[iy] = true;
                dom.push(y);
            } else if map[y] != iy {
                return None;
            }
        }
    }
    Some((dom, map))
}

fn search(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    imgs: &mut Vec<usize>,
    collect_all: bool,
    out: &mut Vec<Vec<usize>>,
) -> bool {
    let t = imgs.len();
    if t == gens.len() {
        if let Some((dom, map)) = hom_on_closure(g, h, gens, imgs) {
            if dom.len() == g.order() {
                out.push(map);
                return !collect_all;
            }
        }
        return false;
    }
    for &cand in &candidates[t] {
        imgs.push(cand);
        if hom_on_closure(g, h, gens, imgs).is_some()
            && search(g, h, gens, candidates, imgs, collect_all, out)
        {
            imgs.pop();
            return true;
        }
        imgs.pop();
    }
    false
}

/// An isomorphism g -> h as an element map, if one exists. Assumes the
/// orders agree; screening is the caller's (or `is_isomorphic`'s) job.
fn find_isomorphisms(g: &FiniteGroup, h: &FiniteGroup, collect_all: bool) -> Vec<Vec<usize>> {
    debug_assert_eq!(g.order(), h.order());
    if g.order() == 1 {
        return vec![vec![0]];
    }
    let gc = ConjugacyData::new(g);
    let hc = ConjugacyData::new(h);
    let gens = g.greedy_generators();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&ge| {
            (0..h.order())
                .filter(|&y| {
                    h.order_of(y) == g.order_of(ge)
                        && hc.sizes[hc.class_of[y]] == gc.sizes[gc.class_of[ge]]
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut imgs = Vec::new();
    search(g, h, &gens, &candidates, &mut imgs, collect_all, &mut out);
    out
}

pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Result<bool> {
    if g.order() != h.order() {
        return Ok(false);
    }
    let gc = ConjugacyData::new(g);
    let hc = ConjugacyData::new(h);
    if invariants(g, &gc) != invariants(h, &hc) {
        return Ok(false);
    }
    Ok(!find_isomorphisms(g, h, false).is_empty())
}

/// All automorphisms of g, as element permutations. Intended for small
/// groups (the search enumerates every generator-image assignment).
pub fn automorphisms(g: &FiniteGroup) -> Vec<Vec<usize>> {
    find_isomorphisms(g, g, true)
}

/// Is g isomorphic to a subgroup of h? Backtracking over images of a greedy
/// generating sequence, filtered by element order (a monomorphism preserves
/// orders); the closure check enforces injectivity.
pub fn embeds_as_subgroup(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    if h.order() % g.order() != 0 {
        return false;
    }
    if g.order() == 1 {
        return true;
    }
    let h_orders = h.nontrivial_orders();
    if !g.nontrivial_orders().iter().all(|o| h_orders.contains(o)) {
        return false;
    }
    let gens = g.greedy_generators();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&ge| {
            (0..h.order())
                .filter(|&y| h.order_of(y) == g.order_of(ge))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut imgs = Vec::new();
    search(g, h, &gens, &candidates, &mut imgs, false, &mut out)
}

#[cfg(test)]
mod tests {
    use super::super::constructors::*;
    use super::*;

    #[test]
    fn abelian_invariant_examples() {
        assert_eq!(abelian_invariants(&make_cyclic(12).unwrap()), vec![3, 4]);
        assert_eq!(abelian_invariants(&make_dihedral(4).unwrap()), vec![2, 2]);
        assert_eq!(abelian_invariants(&make_dicyclic(2).unwrap()), vec![2, 2]);
        assert_eq!(abelian_invariants(&make_dihedral(3).unwrap()), vec![2]);
        assert_eq!(abelian_invariants(&make_alternating5().unwrap()), Vec::<usize>::new());
        let c4xc2 = direct_product(&make_cyclic(4).unwrap(), &make_cyclic(2).unwrap()).unwrap();
        assert_eq!(abelian_invariants(&c4xc2), vec![2, 4]);
        assert_eq!(abelian_invariants(&make_semidirect(5, 8, 2).unwrap()), vec![8]);
    }

    #[test]
    fn chinese_remainder_isomorphism() {
        let c6 = make_cyclic(6).unwrap();
        let c2xc3 = direct_product(&make_cyclic(2).unwrap(), &make_cyclic(3).unwrap()).unwrap();
        assert!(is_isomorphic(&c6, &c2xc3).unwrap());
        let c4 = make_cyclic(4).unwrap();
        let v4 = direct_product(&make_cyclic(2).unwrap(), &make_cyclic(2).unwrap()).unwrap();
        assert!(!is_isomorphic(&c4, &v4).unwrap());
    }

    #[test]
    fn dihedral_twelve_splits() {
        let d6 = make_dihedral(6).unwrap();
        let c2xd3 = direct_product(&make_cyclic(2).unwrap(), &make_dihedral(3).unwrap()).unwrap();
        assert!(is_isomorphic(&d6, &c2xd3).unwrap());
        let dc3 = make_dicyclic(3).unwrap();
        assert!(!is_isomorphic(&d6, &dc3).unwrap());
        let a4 = make_alternating4().unwrap();
        assert!(!is_isomorphic(&d6, &a4).unwrap());
    }

    #[test]
    fn quaternion_vs_dihedral() {
        let q8 = make_dicyclic(2).unwrap();
        let d4 = make_dihedral(4).unwrap();
        assert!(!is_isomorphic(&q8, &d4).unwrap());
    }

    #[test]
    fn derived_series() {
        assert_eq!(derived_series_sizes(&make_symmetric4().unwrap()), vec![24, 12, 4, 1]);
        assert_eq!(derived_series_sizes(&make_alternating5().unwrap()), vec![60]);
        assert_eq!(derived_series_sizes(&make_cyclic(5).unwrap()), vec![5, 1]);
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphisms(&make_cyclic(8).unwrap()).len(), 4);
        let v4 = direct_product(&make_cyclic(2).unwrap(), &make_cyclic(2).unwrap()).unwrap();
        assert_eq!(automorphisms(&v4).len(), 6); // GL(2, 2)
        assert_eq!(automorphisms(&make_dihedral(3).unwrap()).len(), 6);
        assert_eq!(automorphisms(&make_dicyclic(2).unwrap()).len(), 24);
        // every automorphism really is one
        let q8 = make_dicyclic(2).unwrap();
        for phi in automorphisms(&q8) {
            for a in 0..8 {
                for b in 0..8 {
                    assert_eq!(phi[q8.mul(a, b)], q8.mul(phi[a], phi[b]));
                }
            }
        }
    }
}
