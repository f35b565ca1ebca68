//! Direct constructions: cyclic, dihedral, dicyclic, semidirect and central
//! products, permutation closures, and SL(2,q) for small q.
//!
//! Element numbering is canonical per constructor (cyclic: residues;
//! products: lexicographic pairs; permutation/matrix groups: identity first,
//! then sorted) so tables are reproducible.

use super::{FiniteGroup, DEFAULT_ORDER_CAP};
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

fn check_cap(order: usize) -> Result<()> {
    // hard sanity cap for direct constructions; large central products are
    // allowed up to 2x the default cap for the SO(4) structural route
    if order > 2 * DEFAULT_ORDER_CAP + 200 {
        return Err(Error::resource(format!(
            "requested group order {order} exceeds construction cap"
        )));
    }
    Ok(())
}

pub fn make_cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::invalid("cyclic group needs n >= 1"));
    }
    check_cap(n)?;
    let mut table = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = (i + j) % n;
        }
    }
    let g = FiniteGroup::from_table_unchecked(table, n)?;
    let mut labels = BTreeMap::new();
    if n > 1 {
        labels.insert("x".to_string(), 1);
    }
    Ok(g.with_labels(labels))
}

/// Dihedral group of order 2n; element `e*n + i` is `s^e r^i`.
pub fn make_dihedral(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::invalid("dihedral group needs n >= 1"));
    }
    check_cap(2 * n)?;
    let ord = 2 * n;
    let mut table = vec![0usize; ord * ord];
    for a in 0..2 {
        for i in 0..n {
            for b in 0..2 {
                for j in 0..n {
                    // (s^a r^i)(s^b r^j) = s^{a+b} r^{(-1)^b i + j}
                    let e = (a + b) % 2;
                    let k = if b == 1 { (n - i) % n + j } else { i + j } % n;
                    table[(a * n + i) * ord + (b * n + j)] = e * n + k;
                }
            }
        }
    }
    let g = FiniteGroup::from_table_unchecked(table, ord)?;
    let mut labels = BTreeMap::new();
    if n > 1 {
        labels.insert("r".to_string(), 1);
    }
    labels.insert("s".to_string(), n);
    Ok(g.with_labels(labels))
}

/// Dicyclic group DC_n of order 4n:
/// `<x, y | x^{2n} = 1, x^n = y^2, y^{-1} x y = x^{-1}>`.
/// Element `e*2n + i` is `y^e x^i`.
pub fn make_dicyclic(n: usize) -> Result<FiniteGroup> {
    if n < 2 {
        return Err(Error::invalid("dicyclic group needs n >= 2"));
    }
    check_cap(4 * n)?;
    let m = 2 * n;
    let ord = 4 * n;
    let mut table = vec![0usize; ord * ord];
    for a in 0..2 {
        for i in 0..m {
            for b in 0..2 {
                for j in 0..m {
                    // (y^a x^i)(y^b x^j): move x^i past y^b (x^i y = y x^{-i}),
                    // then y^{a+b} with y^2 = x^n.
                    let (e, extra) = if a + b == 2 { (0, n) } else { (a + b, 0) };
                    let i_eff = if b == 1 { (m - i) % m } else { i };
                    let k = (i_eff + j + extra) % m;
                    table[(a * m + i) * ord + (b * m + j)] = e * m + k;
                }
            }
        }
    }
    let g = FiniteGroup::from_table_unchecked(table, ord)?;
    let mut labels = BTreeMap::new();
    labels.insert("x".to_string(), 1);
    labels.insert("y".to_string(), m);
    Ok(g.with_labels(labels))
}

/// Z_n x| Z_k with the action `a -> a^r`; element `t*n + i` is `b^t a^i`.
pub fn make_semidirect(n: usize, k: usize, r: usize) -> Result<FiniteGroup> {
    if n == 0 || k == 0 {
        return Err(Error::invalid("semidirect product needs n, k >= 1"));
    }
    check_cap(n * k)?;
    let r = r % n.max(1);
    if num_integer::gcd(r, n) != 1 {
        return Err(Error::invalid(format!("r = {r} is not a unit mod {n}")));
    }
    // r^k must be 1 mod n
    let mut rk = 1usize;
    for _ in 0..k {
        rk = rk * r % n;
    }
    if rk % n != 1 % n {
        return Err(Error::invalid(format!(
            "order of r = {r} mod {n} does not divide k = {k}"
        )));
    }
    let ord = n * k;
    // powers of r
    let mut rp = vec![1usize % n; k];
    for t in 1..k {
        rp[t] = rp[t - 1] * r % n;
    }
    let mut table = vec![0usize; ord * ord];
    for t1 in 0..k {
        for i1 in 0..n {
            for t2 in 0..k {
                for i2 in 0..n {
                    // (b^t1 a^i1)(b^t2 a^i2) = b^{t1+t2} a^{i1 r^{t2}... }
                    // with our convention b a b^{-1} = a^r:
                    // a^{i1} b^{t2} = b^{t2} a^{i1 * r^{t2}}? No: b a = a^r b,
                    // so a b = b a^{r'} with r' the inverse action. Use the
                    // standard pair form: (i1,t1)*(i2,t2) = (i1 + r^{t1} i2, t1+t2).
                    let i = (i1 + rp[t1] * i2) % n;
                    let t = (t1 + t2) % k;
                    table[(t1 * n + i1) * ord + (t2 * n + i2)] = t * n + i;
                }
            }
        }
    }
    let g = FiniteGroup::from_table_unchecked(table, ord)?;
    let mut labels = BTreeMap::new();
    if n > 1 {
        labels.insert("a".to_string(), 1);
    }
    if k > 1 {
        labels.insert("b".to_string(), n);
    }
    Ok(g.with_labels(labels))
}

/// Direct product with lexicographic pair numbering `(a, b) -> a*|H| + b`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let ng = g.order();
    let nh = h.order();
    check_cap(ng * nh)?;
    let ord = ng * nh;
    let mut table = vec![0usize; ord * ord];
    for a1 in 0..ng {
        for b1 in 0..nh {
            for a2 in 0..ng {
                for b2 in 0..nh {
                    let a = g.mul(a1, a2);
                    let b = h.mul(b1, b2);
                    table[(a1 * nh + b1) * ord + (a2 * nh + b2)] = a * nh + b;
                }
            }
        }
    }
    FiniteGroup::from_table_unchecked(table, ord)
}

/// Central product G x_{C2} H: quotient of G x H by {(1,1), (z_g, z_h)}.
pub fn central_product(
    g: &FiniteGroup,
    z_g: usize,
    h: &FiniteGroup,
    z_h: usize,
) -> Result<FiniteGroup> {
    for (grp, z, name) in [(g, z_g, "left"), (h, z_h, "right")] {
        if z >= grp.order() || grp.order_of(z) != 2 {
            return Err(Error::invalid(format!(
                "{name} element is not an involution"
            )));
        }
        if !grp.center().contains(z) {
            return Err(Error::invalid(format!("{name} involution is not central")));
        }
    }
    let prod = direct_product(g, h)?;
    let z = z_g * h.order() + z_h;
    let normal = ElemSet::from_iter(prod.order(), [0, z]);
    let (q, _) = prod.quotient(&normal)?;
    Ok(q)
}

/// Permutation on `degree` points, used only to seed closure constructions.
pub fn from_permutations(degree: usize, gens: &[Vec<usize>]) -> Result<FiniteGroup> {
    for p in gens {
        if p.len() != degree {
            return Err(Error::invalid("permutation has wrong degree"));
        }
        let mut seen = vec![false; degree];
        for &i in p {
            if i >= degree || seen[i] {
                return Err(Error::invalid("not a permutation"));
            }
            seen[i] = true;
        }
    }
    let id: Vec<usize> = (0..degree).collect();
    let mut elems = vec![id.clone()];
    let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    index.insert(id, 0);
    let mut queue = vec![0usize];
    while let Some(i) = queue.pop() {
        let base = elems[i].clone();
        for gperm in gens {
            // compose: (base then gperm)
            let comp: Vec<usize> = base.iter().map(|&x| gperm[x]).collect();
            if !index.contains_key(&comp) {
                check_cap(elems.len() + 1)?;
                index.insert(comp.clone(), elems.len());
                elems.push(comp);
                queue.push(elems.len() - 1);
            }
        }
    }
    // renumber: identity first, then sorted by permutation image
    let mut order_elems: Vec<Vec<usize>> = elems.clone();
    order_elems.sort();
    let id: Vec<usize> = (0..degree).collect();
    let pos = order_elems.iter().position(|p| *p == id).unwrap();
    order_elems.swap(0, pos);
    order_elems[1..].sort();
    let mut index = BTreeMap::new();
    for (i, p) in order_elems.iter().enumerate() {
        index.insert(p.clone(), i);
    }
    let n = order_elems.len();
    let mut table = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            let comp: Vec<usize> = order_elems[i].iter().map(|&x| order_elems[j][x]).collect();
            table[i * n + j] = index[&comp];
        }
    }
    FiniteGroup::from_table_unchecked(table, n)
}

/// SL(2, q) for a prime q, as explicit 2x2 matrices.
pub fn make_sl2(q: usize) -> Result<FiniteGroup> {
    if !crate::fp::is_prime(q as u64) {
        return Err(Error::invalid("SL(2,q) supported for prime q only"));
    }
    let expected = q * (q * q - 1);
    check_cap(expected)?;
    let mut elems: Vec<[usize; 4]> = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    if (a * d + q * q - b * c % (q * q)) % q == 1 {
                        elems.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    debug_assert_eq!(elems.len(), expected);
    let id = [1usize, 0, 0, 1];
    let pos = elems.iter().position(|m| *m == id).unwrap();
    elems.swap(0, pos);
    elems[1..].sort();
    let mut index = BTreeMap::new();
    for (i, m) in elems.iter().enumerate() {
        index.insert(*m, i);
    }
    let n = elems.len();
    let mut table = vec![0usize; n * n];
    for i in 0..n {
        let x = elems[i];
        for j in 0..n {
            let y = elems[j];
            let prod = [
                (x[0] * y[0] + x[1] * y[2]) % q,
                (x[0] * y[1] + x[1] * y[3]) % q,
                (x[2] * y[0] + x[3] * y[2]) % q,
                (x[2] * y[1] + x[3] * y[3]) % q,
            ];
            table[i * n + j] = index[&prod];
        }
    }
    FiniteGroup::from_table_unchecked(table, n)
}

/// Semidirect product N x| C_k by an automorphism `phi` of N with
/// `phi^k = id`. Element `t*|N| + x` is `(x, c^t)`.
pub fn semidirect_by_automorphism(
    n_grp: &FiniteGroup,
    phi: &[usize],
    k: usize,
) -> Result<FiniteGroup> {
    let n = n_grp.order();
    if phi.len() != n {
        return Err(Error::invalid("automorphism has wrong length"));
    }
    if phi[0] != 0 {
        return Err(Error::invalid("automorphism must fix the identity"));
    }
    for a in 0..n {
        for b in 0..n {
            if phi[n_grp.mul(a, b)] != n_grp.mul(phi[a], phi[b]) {
                return Err(Error::invalid("map is not an automorphism"));
            }
        }
    }
    // phi^k = id
    let mut powers: Vec<Vec<usize>> = vec![(0..n).collect()];
    for t in 1..k {
        let prev = &powers[t - 1];
        powers.push((0..n).map(|x| phi[prev[x]]).collect());
    }
    let last: Vec<usize> = (0..n).map(|x| phi[powers[k - 1][x]]).collect();
    if last != (0..n).collect::<Vec<_>>() {
        return Err(Error::invalid("automorphism order does not divide k"));
    }
    check_cap(n * k)?;
    let ord = n * k;
    let mut table = vec![0usize; ord * ord];
    for t1 in 0..k {
        for x1 in 0..n {
            for t2 in 0..k {
                for x2 in 0..n {
                    // (x1, c^t1)(x2, c^t2) = (x1 * phi^t1(x2), c^{t1+t2})
                    let x = n_grp.mul(x1, powers[t1][x2]);
                    let t = (t1 + t2) % k;
                    table[(t1 * n + x1) * ord + (t2 * n + x2)] = t * n + x;
                }
            }
        }
    }
    FiniteGroup::from_table_unchecked(table, ord)
}

/// Alternating group A4 on 4 points.
pub fn make_alternating4() -> Result<FiniteGroup> {
    from_permutations(4, &[vec![1, 2, 0, 3], vec![0, 2, 3, 1]])
}

/// Symmetric group S4 on 4 points.
pub fn make_symmetric4() -> Result<FiniteGroup> {
    from_permutations(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]])
}

/// Alternating group A5 on 5 points.
pub fn make_alternating5() -> Result<FiniteGroup> {
    from_permutations(5, &[vec![1, 2, 3, 4, 0], vec![1, 2, 0, 3, 4]])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_examples() {
        assert!(make_cyclic(0).is_err());
        let c1 = make_cyclic(1).unwrap();
        assert_eq!(c1.order(), 1);
        let c12 = make_cyclic(12).unwrap();
        c12.validate().unwrap();
        let mut orders = c12.order_multiset();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 3, 3, 4, 4, 6, 6, 12, 12, 12, 12]);
    }

    #[test]
    fn dihedral_degenerate_is_c2() {
        let d1 = make_dihedral(1).unwrap();
        assert_eq!(d1.order(), 2);
        assert_eq!(d1.order_multiset(), vec![1, 2]);
    }

    #[test]
    fn dicyclic_structure() {
        assert!(make_dicyclic(1).is_err());
        let q8 = make_dicyclic(2).unwrap();
        q8.validate().unwrap();
        assert_eq!(q8.order(), 8);
        // exactly one involution (quaternion group)
        let invs = q8
            .element_orders()
            .iter()
            .filter(|&&o| o == 2)
            .count();
        assert_eq!(invs, 1);
        // DC_4: every element outside <x> has order 4
        let dc4 = make_dicyclic(4).unwrap();
        dc4.validate().unwrap();
        assert_eq!(dc4.order(), 16);
        for e in 8..16 {
            assert_eq!(dc4.order_of(e), 4);
        }
        // x^n is the unique central involution
        let n = 4;
        let xn = dc4.pow(1, n as i64);
        assert_eq!(dc4.order_of(xn), 2);
        assert_eq!(dc4.central_involutions(), vec![xn]);
    }

    #[test]
    fn semidirect_examples() {
        let d73 = make_semidirect(7, 3, 2).unwrap();
        d73.validate().unwrap();
        assert_eq!(d73.order(), 21);
        assert!(!d73.is_abelian());
        for e in 1..21 {
            assert!(matches!(d73.order_of(e), 3 | 7));
        }
        // trivial action gives the direct product
        let c15 = make_semidirect(5, 3, 1).unwrap();
        assert!(c15.is_abelian());
        // invalid action rejected
        assert!(make_semidirect(7, 3, 3).is_err());
        // SmallGroup(40,3) = C5 x| C8 via r = 2
        let g = make_semidirect(5, 8, 2).unwrap();
        g.validate().unwrap();
        assert_eq!(g.order(), 40);
    }

    #[test]
    fn products() {
        let c4 = make_cyclic(4).unwrap();
        let d3 = make_dihedral(3).unwrap();
        let p = direct_product(&c4, &d3).unwrap();
        p.validate().unwrap();
        assert_eq!(p.order(), 24);
        let c1 = make_cyclic(1).unwrap();
        let q = direct_product(&d3, &c1).unwrap();
        assert_eq!(q.order(), 6);
    }

    #[test]
    fn central_products() {
        let q8 = make_dicyclic(2).unwrap();
        let z = q8.central_involutions()[0];
        let cp = central_product(&q8, z, &q8, z).unwrap();
        cp.validate().unwrap();
        assert_eq!(cp.order(), 32);
        // C4 x_{C2} C4 is abelian of order 8
        let c4 = make_cyclic(4).unwrap();
        let cp2 = central_product(&c4, 2, &c4, 2).unwrap();
        assert_eq!(cp2.order(), 8);
        assert!(cp2.is_abelian());
        // G x_{C2} C2 collapses to G
        let c2 = make_cyclic(2).unwrap();
        let cp3 = central_product(&q8, z, &c2, 1).unwrap();
        assert_eq!(cp3.order(), 8);
        // rejects non-central and non-involution inputs
        assert!(central_product(&q8, 1, &c2, 1).is_err());
    }

    #[test]
    fn permutation_groups() {
        // A4 = <(0 1 2), (1 2 3)>
        let a4 = from_permutations(4, &[vec![1, 2, 0, 3], vec![0, 2, 3, 1]]).unwrap();
        a4.validate().unwrap();
        assert_eq!(a4.order(), 12);
        // S4 = <(0 1), (0 1 2 3)>
        let s4 = from_permutations(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]]).unwrap();
        assert_eq!(s4.order(), 24);
        // A5 = <(0 1 2 3 4), (0 1 2)>
        let a5 = from_permutations(5, &[vec![1, 2, 3, 4, 0], vec![1, 2, 0, 3, 4]]).unwrap();
        assert_eq!(a5.order(), 60);
    }

    #[test]
    fn sl2_small() {
        let sl23 = make_sl2(3).unwrap();
        sl23.validate().unwrap();
        assert_eq!(sl23.order(), 24);
        // unique involution: -I
        let invs = sl23
            .element_orders()
            .iter()
            .filter(|&&o| o == 2)
            .count();
        assert_eq!(invs, 1);
        let sl25 = make_sl2(5).unwrap();
        assert_eq!(sl25.order(), 120);
    }

    #[test]
    fn semidirect_by_automorphism_matches_parametric() {
        let c7 = make_cyclic(7).unwrap();
        // a -> a^2 on C7
        let phi: Vec<usize> = (0..7).map(|x| x * 2 % 7).collect();
        let g = semidirect_by_automorphism(&c7, &phi, 3).unwrap();
        g.validate().unwrap();
        assert_eq!(g.order(), 21);
        assert!(!g.is_abelian());
    }
}
