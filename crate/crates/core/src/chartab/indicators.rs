//! Frobenius-Schur indicators, character kernels, and determinant
//! characters, all in exact arithmetic.

use super::CharacterTable;
use crate::bitset::ElemSet;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Frobenius-Schur indicator (1/|G|) sum chi(x^2): +1 real (orthogonal),
/// 0 complex, -1 quaternionic (symplectic).
pub fn fs_indicator(g: &FiniteGroup, t: &CharacterTable, row: usize) -> Result<i64> {
    let mut acc = Cyclotomic::zero(t.conductor);
    for l in 0..t.num_classes() {
        let sq = t.classes.class_of[g.pow(t.classes.reps[l], 2)];
        acc = acc.add(&t.rows[row].values[sq].scale(t.classes.sizes[l] as i128));
    }
    let v = acc
        .div_exact(g.order() as i128)
        .and_then(|c| c.as_integer())
        .ok_or_else(|| Error::internal("indicator is not a rational integer"))?;
    if !(-1..=1).contains(&v) {
        return Err(Error::internal("indicator outside {-1, 0, 1}"));
    }
    Ok(v as i64)
}

/// Kernel of the representation: elements where chi(x) = chi(1).
pub fn kernel(g: &FiniteGroup, t: &CharacterTable, row: usize) -> ElemSet {
    let deg = Cyclotomic::integer(t.conductor, t.rows[row].degree as i128);
    let mut s = ElemSet::empty(g.order());
    for x in 0..g.order() {
        if *t.value_on_element(row, x) == deg {
            s.insert(x);
        }
    }
    s
}

pub fn is_faithful(g: &FiniteGroup, t: &CharacterTable, row: usize) -> bool {
    kernel(g, t, row).len() == 1
}

/// Eigenvalue multiplicities of rho(g_l): the representing matrix of an
/// order-o element has eigenvalue zeta_o^t with multiplicity m_t, recovered
/// from the power-map character values by an exact discrete Fourier
/// transform. Returned as (o, multiplicities).
pub fn eigenvalue_multiplicities(
    g: &FiniteGroup,
    t: &CharacterTable,
    row: usize,
    class: usize,
) -> Result<(usize, Vec<i128>)> {
    let rep = t.classes.reps[class];
    let o = g.order_of(rep);
    let e = t.conductor;
    let mut out = Vec::with_capacity(o);
    let mut total = 0i128;
    for tt in 0..o {
        let mut acc = Cyclotomic::zero(e);
        for s in 0..o {
            let cls = t.classes.class_of[g.pow(rep, s as i64)];
            // zeta_o^{-s t} embedded as zeta_e^{(e/o) * (-s t mod o)}
            let expo = (e / o) * ((o - (s * tt) % o) % o);
            acc = acc.add(&t.rows[row].values[cls].mul(&Cyclotomic::root_power(e, expo % e)));
        }
        let m = acc
            .div_exact(o as i128)
            .and_then(|c| c.as_integer())
            .ok_or_else(|| Error::internal("eigenvalue multiplicity is not integral"))?;
        if m < 0 {
            return Err(Error::internal("negative eigenvalue multiplicity"));
        }
        total += m;
        out.push(m);
    }
    if total != t.rows[row].degree as i128 {
        return Err(Error::internal("multiplicities do not sum to the degree"));
    }
    Ok((o, out))
}

/// The determinant character det(rho), one root of unity per class.
pub fn determinant_character(
    g: &FiniteGroup,
    t: &CharacterTable,
    row: usize,
) -> Result<Vec<Cyclotomic>> {
    let e = t.conductor;
    (0..t.num_classes())
        .map(|l| {
            let (o, mult) = eigenvalue_multiplicities(g, t, row, l)?;
            // det = prod (zeta_o^t)^{m_t} = zeta_o^{sum t m_t}
            let expo: i128 = mult
                .iter()
                .enumerate()
                .map(|(tt, &m)| (tt as i128 * m).rem_euclid(o as i128))
                .sum();
            let expo = (expo.rem_euclid(o as i128)) as usize;
            Ok(Cyclotomic::root_power(e, (e / o) * expo % e))
        })
        .collect()
}

/// True if every value of the (linear) character is 1.
pub fn is_trivial_character(t: &CharacterTable, values: &[Cyclotomic]) -> bool {
    let one = Cyclotomic::one(t.conductor);
    values.iter().all(|v| *v == one)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::constructors::*;

    #[test]
    fn indicators_of_small_groups() {
        // C3: trivial is real, the two faithful linear characters are complex
        let g = make_cyclic(3).unwrap();
        let t = CharacterTable::new(&g).unwrap();
        let inds: Vec<i64> = (0..3).map(|r| fs_indicator(&g, &t, r).unwrap()).collect();
        assert_eq!(inds.iter().filter(|&&i| i == 1).count(), 1);
        assert_eq!(inds.iter().filter(|&&i| i == 0).count(), 2);
        // Q8: the 2-dimensional character is quaternionic
        let g = make_dicyclic(2).unwrap();
        let t = CharacterTable::new(&g).unwrap();
        let two = t.rows.iter().position(|r| r.degree == 2).unwrap();
        assert_eq!(fs_indicator(&g, &t, two).unwrap(), -1);
        // D4: everything is real
        let g = make_dihedral(4).unwrap();
        let t = CharacterTable::new(&g).unwrap();
        for r in 0..t.rows.len() {
            assert_eq!(fs_indicator(&g, &t, r).unwrap(), 1);
        }
    }

    #[test]
    fn sum_rule_counts_involutions() {
        // sum of indicators * degrees = #{x : x^2 = 1}
        for g in [
            make_dihedral(6).unwrap(),
            make_dicyclic(3).unwrap(),
            make_sl2(3).unwrap(),
            make_symmetric4().unwrap(),
        ] {
            let t = CharacterTable::new(&g).unwrap();
            let s: i64 = (0..t.rows.len())
                .map(|r| fs_indicator(&g, &t, r).unwrap() * t.rows[r].degree as i64)
                .sum();
            let sq = (0..g.order()).filter(|&x| g.mul(x, x) == 0).count();
            assert_eq!(s, sq as i64);
        }
    }

    #[test]
    fn kernels() {
        let g = make_dihedral(3).unwrap();
        let t = CharacterTable::new(&g).unwrap();
        assert_eq!(kernel(&g, &t, t.trivial_row()).len(), 6);
        let two = t.rows.iter().position(|r| r.degree == 2).unwrap();
        assert!(is_faithful(&g, &t, two));
        // sign character kernel = rotation subgroup
        let sign = (0..t.rows.len())
            .find(|&r| t.rows[r].degree == 1 && r != t.trivial_row())
            .unwrap();
        assert_eq!(kernel(&g, &t, sign).len(), 3);
    }

    #[test]
    fn determinant_characters() {
        // S3 degree-2 character has det = sign
        let g = make_dihedral(3).unwrap();
        let t = CharacterTable::new(&g).unwrap();
        let two = t.rows.iter().position(|r| r.degree == 2).unwrap();
        let det = determinant_character(&g, &t, two).unwrap();
        assert!(!is_trivial_character(&t, &det));
        // it must equal one of the linear characters
        assert!(t.rows.iter().any(|r| r.degree == 1 && r.values == det));
        // Q8 degree-2 (symplectic) character has trivial determinant
        let g = make_dicyclic(2).unwrap();
        let t = CharacterTable::new(&g).unwrap();
        let two = t.rows.iter().position(|r| r.degree == 2).unwrap();
        let det = determinant_character(&g, &t, two).unwrap();
        assert!(is_trivial_character(&t, &det));
        // A5 degree-3: rotation representation lands in SO(3)
        let g = make_alternating5().unwrap();
        let t = CharacterTable::new(&g).unwrap();
        let three = t.rows.iter().position(|r| r.degree == 3).unwrap();
        assert!(is_trivial_character(
            &t,
            &determinant_character(&g, &t, three).unwrap()
        ));
    }
}
