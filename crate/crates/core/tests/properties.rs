//! Property suites over randomized inputs: constructor axioms, subgroup
//! arithmetic, signature arithmetic, isomorphism symmetry, and orthogonal
//! embedding monotonicity.

use num_rational::Rational64;
use proptest::prelude::*;
use torsion_obstruct::chartab::embed::OrthogonalSummands;
use torsion_obstruct::chartab::CharacterTable;
use torsion_obstruct::group::constructors::*;
use torsion_obstruct::group::isomorphism::is_isomorphic;
use torsion_obstruct::group::subgroups::{all_subgroups, index2_subgroups};
use torsion_obstruct::group::FiniteGroup;
use torsion_obstruct::surface::{admissible_signatures, genus_of_action, Signature};

/// A pool of assorted small groups for randomized picks.
fn pool() -> Vec<FiniteGroup> {
    vec![
        make_cyclic(1).unwrap(),
        make_cyclic(7).unwrap(),
        make_cyclic(12).unwrap(),
        make_dihedral(4).unwrap(),
        make_dihedral(6).unwrap(),
        make_dicyclic(2).unwrap(),
        make_dicyclic(5).unwrap(),
        make_alternating4().unwrap(),
        make_semidirect(7, 3, 2).unwrap(),
        direct_product(&make_cyclic(2).unwrap(), &make_cyclic(8).unwrap()).unwrap(),
        make_sl2(3).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn cyclic_constructor_axioms(n in 1usize..=24) {
        let g = make_cyclic(n).unwrap();
        g.validate().unwrap();
        prop_assert_eq!(g.order(), n);
        prop_assert_eq!(g.order_of(1 % n), n);
    }

    #[test]
    fn dihedral_and_dicyclic_shapes(n in 2usize..=12) {
        let d = make_dihedral(n).unwrap();
        d.validate().unwrap();
        prop_assert_eq!(d.order(), 2 * n);
        let dc = make_dicyclic(n).unwrap();
        dc.validate().unwrap();
        prop_assert_eq!(dc.order(), 4 * n);
        // unique central involution x^n
        let centrals = dc.central_involutions();
        prop_assert_eq!(centrals.len(), 1);
        // the central involution is the only element of order 2
        prop_assert_eq!(dc.element_orders().iter().filter(|&&o| o == 2).count(), 1);
        prop_assert_eq!(dc.element_orders().iter().filter(|&&o| o == 4).count() >= 2 * n, true);
    }

    #[test]
    fn semidirect_abelian_iff_trivial_action(
        (n, k) in (2usize..=12).prop_flat_map(|n| (Just(n), 2usize..=6)),
        r_seed in 0usize..6,
    ) {
        // enumerate valid r values for (n, k) and pick one
        let valid: Vec<usize> = (1..n)
            .filter(|&r| {
                num_integer::gcd(r, n) == 1 && {
                    let mut acc = 1usize;
                    for _ in 0..k { acc = acc * r % n; }
                    acc == 1
                }
            })
            .collect();
        prop_assume!(!valid.is_empty());
        let r = valid[r_seed % valid.len()];
        let g = make_semidirect(n, k, r).unwrap();
        prop_assert_eq!(g.order(), n * k);
        prop_assert_eq!(g.is_abelian(), r == 1);
    }

    #[test]
    fn lagrange_and_index2(idx in 0usize..11) {
        let g = &pool()[idx];
        let subs = all_subgroups(g, 10_000).unwrap();
        for s in &subs {
            prop_assert_eq!(g.order() % s.len(), 0, "subgroup order divides");
        }
        // number of index-2 subgroups matches the abelianization count
        let der = g.derived_subgroup();
        let (ab, _) = g.quotient(&der).unwrap();
        prop_assert_eq!(index2_subgroups(g).len(), index2_subgroups(&ab).len());
    }

    #[test]
    fn admissible_signatures_are_exact(idx in 0usize..11, genus in 2usize..=6) {
        let g = &pool()[idx];
        for s in admissible_signatures(g, genus).unwrap() {
            prop_assert!(s.normalized_area() > Rational64::from_integer(0));
            prop_assert_eq!(
                genus_of_action(g.order(), &s),
                Rational64::from_integer(genus as i64)
            );
            let orders = g.nontrivial_orders();
            prop_assert!(s.periods.iter().all(|p| orders.contains(p)));
        }
    }

    #[test]
    fn signature_rejects_bad_periods(g0 in 0usize..3, p in 0usize..2) {
        prop_assert!(Signature::new(g0, vec![2, p]).is_err());
    }

    #[test]
    fn isomorphism_reflexive_and_symmetric(i in 0usize..11, j in 0usize..11) {
        let pool = pool();
        let (g, h) = (&pool[i], &pool[j]);
        prop_assert!(is_isomorphic(g, g).unwrap());
        prop_assert_eq!(is_isomorphic(g, h).unwrap(), is_isomorphic(h, g).unwrap());
        prop_assert_eq!(is_isomorphic(g, h).unwrap(), i == j);
    }

    #[test]
    fn so_embedding_monotone_by_two(idx in 0usize..11, n in 0usize..8) {
        let pool = pool();
        let g = &pool[idx];
        let t = CharacterTable::new(g).unwrap();
        let s = OrthogonalSummands::new(g, &t).unwrap();
        if s.embeds_in_so(g, n) {
            prop_assert!(s.embeds_in_so(g, n + 2), "pad by a trivial 2-dim block");
        }
    }
}

#[test]
fn todd_coxeter_cross_oracle() {
    use torsion_obstruct::group::presentation::Presentation;
    use torsion_obstruct::group::todd_coxeter::todd_coxeter;
    for n in 2..=8usize {
        let p = Presentation::parse(&format!("gens 1\na^{n}\n")).unwrap();
        let g = todd_coxeter(&p, 5000).unwrap();
        assert!(is_isomorphic(&g, &make_cyclic(n).unwrap()).unwrap());
    }
    for n in 2..=6usize {
        let p = Presentation::parse(&format!("gens 2\na^{n}\nb^2\nb a b a\n")).unwrap();
        let g = todd_coxeter(&p, 5000).unwrap();
        assert!(is_isomorphic(&g, &make_dihedral(n).unwrap()).unwrap());
        let p = Presentation::parse(&format!("gens 2\na^{}\nA^{n} b^2\nB a b a\n", 2 * n)).unwrap();
        let g = todd_coxeter(&p, 5000).unwrap();
        assert!(is_isomorphic(&g, &make_dicyclic(n).unwrap()).unwrap());
    }
}
