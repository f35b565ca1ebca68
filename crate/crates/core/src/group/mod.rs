//! Finite groups realized as explicit multiplication tables.
//!
//! Element 0 is always the identity. Public constructors run the full
//! associativity/identity/inverse check; internal extraction paths (subgroup
//! and quotient tables) inherit validity from an already-checked parent.

pub mod conjugacy;
pub mod constructors;
pub mod isomorphism;
pub mod presentation;
pub mod subgroups;
pub mod todd_coxeter;

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Default cap on group order; covers every group the engine needs to name
/// directly (the largest fixtures are order 120 and 111).
pub const DEFAULT_ORDER_CAP: usize = 200;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    /// row-major: `table[i * order + j] = i * j`
    table: Vec<usize>,
    inverses: Vec<usize>,
    element_orders: Vec<usize>,
    generator_labels: Option<BTreeMap<String, usize>>,
}

impl FiniteGroup {
    /// Build from a raw table, running the full O(n^3) group-axiom check.
    pub fn from_table(table: Vec<usize>, order: usize) -> Result<Self> {
        let g = Self::from_table_unchecked(table, order)?;
        g.validate()?;
        Ok(g)
    }

    /// Build from a table known to be a valid group (subtables of checked
    /// groups, quotients by verified normal subgroups). Still derives
    /// inverses and element orders, and checks identity/closure cheaply.
    pub(crate) fn from_table_unchecked(table: Vec<usize>, order: usize) -> Result<Self> {
        if order == 0 || table.len() != order * order {
            return Err(Error::invalid("multiplication table has wrong shape"));
        }
        for &v in &table {
            if v >= order {
                return Err(Error::invalid("table entry out of range"));
            }
        }
        for x in 0..order {
            if table[x] != x || table[x * order] != x {
                return Err(Error::invalid("element 0 is not an identity"));
            }
        }
        let mut inverses = vec![usize::MAX; order];
        for x in 0..order {
            for y in 0..order {
                if table[x * order + y] == 0 {
                    inverses[x] = y;
                    break;
                }
            }
            if inverses[x] == usize::MAX {
                return Err(Error::invalid(format!("element {x} has no inverse")));
            }
        }
        let mut element_orders = vec![0usize; order];
        for x in 0..order {
            let mut k = 1usize;
            let mut acc = x;
            while acc != 0 {
                acc = table[acc * order + x];
                k += 1;
                if k > order {
                    return Err(Error::invalid("element order exceeds group order"));
                }
            }
            element_orders[x] = k;
        }
        element_orders[0] = 1;
        Ok(FiniteGroup {
            order,
            table,
            inverses,
            element_orders,
            generator_labels: None,
        })
    }

    /// Full associativity check; O(order^3).
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.table[a * n + b];
                for c in 0..n {
                    let bc = self.table[b * n + c];
                    if self.table[ab * n + c] != self.table[a * n + bc] {
                        return Err(Error::invalid(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        for x in 0..n {
            if self.table[x * n + self.inverses[x]] != 0 {
                return Err(Error::invalid("inverse table corrupt"));
            }
        }
        Ok(())
    }

    pub fn with_labels(mut self, labels: BTreeMap<String, usize>) -> Self {
        self.generator_labels = Some(labels);
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        // g x g^{-1}
        self.mul(self.mul(g, x), self.inverses[g])
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        // [a,b] = a b a^{-1} b^{-1}
        self.mul(
            self.mul(a, b),
            self.mul(self.inverses[a], self.inverses[b]),
        )
    }

    pub fn pow(&self, x: usize, e: i64) -> usize {
        let o = self.element_orders[x] as i64;
        let mut e = e.rem_euclid(o) as usize;
        let mut acc = 0usize;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn order_of(&self, x: usize) -> usize {
        self.element_orders[x]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.element_orders
    }

    pub fn order_multiset(&self) -> Vec<usize> {
        let mut v = self.element_orders.clone();
        v.sort_unstable();
        v
    }

    /// lcm of element orders.
    pub fn exponent(&self) -> usize {
        self.element_orders
            .iter()
            .fold(1usize, |acc, &o| num_integer::lcm(acc, o))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        for a in 0..n {
            for b in a + 1..n {
                if self.table[a * n + b] != self.table[b * n + a] {
                    return false;
                }
            }
        }
        true
    }

    pub fn generator_labels(&self) -> Option<&BTreeMap<String, usize>> {
        self.generator_labels.as_ref()
    }

    /// Distinct element orders >= 2, sorted.
    pub fn nontrivial_orders(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .element_orders
            .iter()
            .copied()
            .filter(|&o| o >= 2)
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Subgroup generated by a set of elements.
    pub fn closure(&self, gens: &[usize]) -> ElemSet {
        let mut set = ElemSet::singleton(self.order, 0);
        let mut frontier = vec![0usize];
        for &g in gens {
            if !set.contains(g) {
                set.insert(g);
                frontier.push(g);
            }
        }
        let mut elems: Vec<usize> = set.to_vec();
        while let Some(x) = frontier.pop() {
            let mut new = Vec::new();
            for &y in &elems {
                for z in [self.mul(x, y), self.mul(y, x)] {
                    if !set.contains(z) {
                        set.insert(z);
                        new.push(z);
                    }
                }
            }
            for z in new {
                elems.push(z);
                frontier.push(z);
            }
        }
        set
    }

    /// Greedy generating sequence: scan elements in index order, keep those
    /// that enlarge the generated subgroup. Deterministic.
    pub fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = ElemSet::singleton(self.order, 0);
        for x in 1..self.order {
            if !span.contains(x) {
                gens.push(x);
                span = self.closure(&gens);
                if span.len() == self.order {
                    break;
                }
            }
        }
        gens
    }

    /// Derived subgroup (closure of all commutators).
    pub fn derived_subgroup(&self) -> ElemSet {
        let mut comms = Vec::new();
        for a in 0..self.order {
            for b in 0..self.order {
                comms.push(self.commutator(a, b));
            }
        }
        comms.sort_unstable();
        comms.dedup();
        self.closure(&comms)
    }

    pub fn center(&self) -> ElemSet {
        let mut c = ElemSet::empty(self.order);
        for x in 0..self.order {
            if (0..self.order).all(|y| self.mul(x, y) == self.mul(y, x)) {
                c.insert(x);
            }
        }
        c
    }

    /// Central involutions, i.e. order-2 elements of the center.
    pub fn central_involutions(&self) -> Vec<usize> {
        self.center()
            .iter()
            .filter(|&x| self.element_orders[x] == 2)
            .collect()
    }

    /// Extract the subgroup on `set` as a standalone group. Elements are
    /// renumbered with the identity first, the rest in ascending parent
    /// index. Returns the group and the parent indices in new order.
    pub fn subgroup(&self, set: &ElemSet) -> Result<(FiniteGroup, Vec<usize>)> {
        if !set.contains(0) {
            return Err(Error::invalid("subgroup set must contain the identity"));
        }
        let mut elems: Vec<usize> = set.to_vec();
        elems.sort_unstable(); // identity 0 first
        let mut index_of = vec![usize::MAX; self.order];
        for (i, &e) in elems.iter().enumerate() {
            index_of[e] = i;
        }
        let n = elems.len();
        let mut table = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                let p = self.mul(elems[i], elems[j]);
                let q = index_of[p];
                if q == usize::MAX {
                    return Err(Error::invalid("set is not closed under multiplication"));
                }
                table[i * n + j] = q;
            }
        }
        Ok((FiniteGroup::from_table_unchecked(table, n)?, elems))
    }

    /// Quotient by a normal subgroup. Cosets are numbered with the identity
    /// coset first, then ascending by minimal element. Returns the quotient
    /// and the coset index of every parent element.
    pub fn quotient(&self, normal: &ElemSet) -> Result<(FiniteGroup, Vec<usize>)> {
        if !normal.contains(0) {
            return Err(Error::invalid("normal subgroup must contain the identity"));
        }
        for g in 0..self.order {
            for x in normal.iter() {
                if !normal.contains(self.conjugate(g, x)) {
                    return Err(Error::invalid("subgroup is not normal"));
                }
            }
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for x in normal.iter() {
                coset_of[self.mul(g, x)] = id;
            }
        }
        let n = reps.len();
        let mut table = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = coset_of[self.mul(reps[i], reps[j])];
            }
        }
        Ok((FiniteGroup::from_table_unchecked(table, n)?, coset_of))
    }

    /// Canonical byte serialization of the table (for fingerprints).
    pub fn table_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.table.len() * 2 + 8);
        out.extend_from_slice(&(self.order as u64).to_le_bytes());
        for &v in &self.table {
            out.extend_from_slice(&(v as u16).to_le_bytes());
        }
        out
    }

    /// Words for every element over a generating set, via breadth-first
    /// search from the identity. Uses generator labels when present, else
    /// `x0, x1, ..` over the greedy generating sequence.
    pub fn element_words(&self) -> Vec<String> {
        let (names, gens): (Vec<String>, Vec<usize>) = match &self.generator_labels {
            Some(map) if !map.is_empty() && self.closure(&map.values().copied().collect::<Vec<_>>()).len() == self.order => map
                .iter()
                .map(|(k, &v)| (k.clone(), v))
                .unzip(),
            _ => {
                let g = self.greedy_generators();
                let names = (0..g.len()).map(|i| format!("x{i}")).collect();
                (names, g)
            }
        };
        let mut words: Vec<Option<String>> = vec![None; self.order];
        words[0] = Some("1".to_string());
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (name, &g) in names.iter().zip(&gens) {
                let y = self.mul(x, g);
                if words[y].is_none() {
                    let w = if x == 0 {
                        name.clone()
                    } else {
                        format!("{}*{}", words[x].as_ref().unwrap(), name)
                    };
                    words[y] = Some(w);
                    queue.push_back(y);
                }
            }
        }
        words
            .into_iter()
            .enumerate()
            .map(|(i, w)| w.unwrap_or_else(|| format!("e{i}")))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::constructors::*;
    use super::*;

    #[test]
    fn rejects_non_identity_zero() {
        // swap so that 0*1 = 0 fails
        let table = vec![1, 0, 0, 1];
        assert!(FiniteGroup::from_table(table, 2).is_err());
    }

    #[test]
    fn closure_and_generators() {
        let g = make_dihedral(5).unwrap();
        assert_eq!(g.order(), 10);
        let gens = g.greedy_generators();
        assert_eq!(g.closure(&gens).len(), 10);
        let rot = g.closure(&[1]);
        assert_eq!(rot.len(), 5);
    }

    #[test]
    fn derived_and_center() {
        let q8 = make_dicyclic(2).unwrap();
        assert_eq!(q8.derived_subgroup().len(), 2);
        assert_eq!(q8.center().len(), 2);
        assert_eq!(q8.central_involutions().len(), 1);
        let s3 = make_dihedral(3).unwrap();
        assert_eq!(s3.derived_subgroup().len(), 3);
        assert_eq!(s3.center().len(), 1);
    }

    #[test]
    fn subgroup_and_quotient_roundtrip() {
        let g = make_cyclic(12).unwrap();
        let sub = g.closure(&[4]); // C3 inside C12
        let (h, _) = g.subgroup(&sub).unwrap();
        assert_eq!(h.order(), 3);
        let (q, _) = g.quotient(&sub).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.order_multiset(), vec![1, 2, 4, 4]);
    }
}
