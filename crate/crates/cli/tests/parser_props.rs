//! Parser properties on a generated corpus: canonical printing is lossless
//! (parse . print . parse = parse) and whitespace never changes the result.

use proptest::prelude::*;
use torsion_obstruct_cli::expr::{parse_group, GroupExpr};

fn leaf() -> impl Strategy<Value = GroupExpr> {
    prop_oneof![
        (1usize..40).prop_map(GroupExpr::Cyclic),
        (1usize..20).prop_map(GroupExpr::Dihedral),
        (2usize..12).prop_map(GroupExpr::Dicyclic),
        Just(GroupExpr::Semidirect(5, 4, 2)),
        Just(GroupExpr::Semidirect(7, 3, 2)),
        Just(GroupExpr::Metacyclic(7, 3)),
        Just(GroupExpr::Metacyclic(13, 4)),
        Just(GroupExpr::Catalog(16, 4)),
        Just(GroupExpr::Catalog(96, 66)),
        Just(GroupExpr::Presented("2T".to_string())),
        Just(GroupExpr::BinaryPolyhedral("2I".to_string())),
    ]
}

fn expr_tree() -> impl Strategy<Value = GroupExpr> {
    leaf().prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| GroupExpr::DirectProduct(
                Box::new(l),
                Box::new(r)
            )),
            (inner.clone(), 0usize..8, inner, 0usize..8).prop_map(|(l, zl, r, zr)| {
                GroupExpr::CentralProduct(Box::new(l), zl, Box::new(r), zr)
            }),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn parse_print_parse_is_parse(e in expr_tree()) {
        // the grammar has no sub-expression parentheses, so products
        // re-associate to the left; compare from the printed text onward
        let canon = parse_group(&e.to_string()).unwrap();
        let reprinted = canon.to_string();
        prop_assert_eq!(reprinted.clone(), e.to_string(), "printing is stable");
        prop_assert_eq!(parse_group(&reprinted).unwrap(), canon);
    }

    #[test]
    fn whitespace_insensitive(e in expr_tree(), pad in "[ \t]{0,2}") {
        // pad around punctuation and the product operator; padding inside
        // multi-character names or numbers would change the tokens
        let canon = parse_group(&e.to_string()).unwrap();
        let safe: String = canon
            .to_string()
            .replace(" x ", &format!("{pad}x{pad}"))
            .replace('(', &format!("{pad}({pad}"))
            .replace(',', &format!("{pad},{pad}"));
        prop_assert_eq!(parse_group(&safe).unwrap(), canon);
    }
}
