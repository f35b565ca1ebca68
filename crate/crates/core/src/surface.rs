//! Faithful orientation-preserving actions on closed hyperbolic surfaces:
//! orbifold signatures, Riemann-Hurwitz arithmetic, generating-vector
//! existence (by counting) and extraction (by search), genus spectra, and
//! the strong symmetric genus.
//!
//! Genus 0 and 1 are outside the hyperbolic machinery and are excluded
//! throughout; every genus argument is >= 2.

use crate::counting::CountingContext;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use num_bigint::BigInt;
use num_rational::Rational64;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Signature {
    pub genus0: usize,
    /// cone-point orders, sorted ascending, each >= 2
    pub periods: Vec<usize>,
}

impl Signature {
    pub fn new(genus0: usize, mut periods: Vec<usize>) -> Result<Self> {
        if periods.iter().any(|&p| p < 2) {
            return Err(Error::invalid("every period must be at least 2"));
        }
        periods.sort_unstable();
        Ok(Signature { genus0, periods })
    }

    /// Normalized hyperbolic area A = 2 g0 - 2 + sum (1 - 1/lambda).
    pub fn normalized_area(&self) -> Rational64 {
        let mut a = Rational64::from_integer(2 * self.genus0 as i64 - 2);
        for &p in &self.periods {
            a += Rational64::new(p as i64 - 1, p as i64);
        }
        a
    }
}

/// Genus from |G| * A = 2g - 2, as an exact rational (integral iff the
/// signature is arithmetically admissible for that order).
pub fn genus_of_action(order: usize, s: &Signature) -> Rational64 {
    Rational64::from_integer(1) + s.normalized_area() * Rational64::new(order as i64, 2)
}

/// All signatures admissible for G at the given genus: periods drawn from
/// the nontrivial element orders, hyperbolic area, exact Riemann-Hurwitz
/// match. Sorted by (g0, r, periods).
pub fn admissible_signatures(g: &FiniteGroup, genus: usize) -> Result<Vec<Signature>> {
    if genus < 2 {
        return Err(Error::invalid("hyperbolic machinery requires genus >= 2"));
    }
    let orders = g.nontrivial_orders();
    let target = Rational64::new(2 * genus as i64 - 2, g.order() as i64);
    let mut out = Vec::new();
    let mut g0 = 0usize;
    loop {
        let base = Rational64::from_integer(2 * g0 as i64 - 2);
        if base > target {
            break;
        }
        let budget = target - base;
        let mut stack = Vec::new();
        enumerate_periods(&orders, 0, budget, &mut stack, &mut |periods| {
            // exclude non-hyperbolic degenerate cases (A <= 0)
            if !(g0 == 0 && periods.len() < 3 || g0 == 1 && periods.is_empty()) {
                out.push(Signature {
                    genus0: g0,
                    periods: periods.to_vec(),
                });
            }
        });
        g0 += 1;
    }
    out.sort_by(|a, b| {
        (a.genus0, a.periods.len(), &a.periods).cmp(&(b.genus0, b.periods.len(), &b.periods))
    });
    Ok(out)
}

fn enumerate_periods(
    orders: &[usize],
    min_idx: usize,
    budget: Rational64,
    stack: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if budget == Rational64::from_integer(0) {
        emit(stack);
        return;
    }
    for (i, &p) in orders.iter().enumerate().skip(min_idx) {
        let term = Rational64::new(p as i64 - 1, p as i64);
        if term > budget {
            continue;
        }
        stack.push(p);
        enumerate_periods(orders, i, budget - term, stack, emit);
        stack.pop();
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratingVector {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl GeneratingVector {
    /// Re-check every defining property against the group and signature.
    pub fn validate(&self, g: &FiniteGroup, s: &Signature) -> Result<()> {
        if self.a.len() != s.genus0 || self.b.len() != s.genus0 || self.c.len() != s.periods.len()
        {
            return Err(Error::Verification("vector shape mismatch".into()));
        }
        for (j, (&c, &p)) in self.c.iter().zip(&s.periods).enumerate() {
            if g.order_of(c) != p {
                return Err(Error::Verification(format!("c[{j}] has wrong order")));
            }
        }
        let mut prod = 0usize;
        for (&a, &b) in self.a.iter().zip(&self.b) {
            prod = g.mul(prod, g.commutator(a, b));
        }
        for &c in &self.c {
            prod = g.mul(prod, c);
        }
        if prod != 0 {
            return Err(Error::Verification("long relation fails".into()));
        }
        let mut gens: Vec<usize> = Vec::new();
        gens.extend(&self.a);
        gens.extend(&self.b);
        gens.extend(&self.c);
        if g.closure(&gens).len() != g.order() {
            return Err(Error::Verification("entries do not generate".into()));
        }
        Ok(())
    }
}

/// Existence verdicts distinguish a certified "no" from an exhausted search.
#[derive(Clone, Debug)]
pub enum VectorSearch {
    Found(GeneratingVector),
    NoneExists,
    /// search budget ran out before a definitive answer
    Inconclusive,
}

const DEFAULT_SUBGROUP_CAP: usize = 20_000;
const DEFAULT_NODE_BUDGET: u64 = 20_000_000;

/// Per-group engine; owns the counting context (subgroup lattice and
/// subgroup character tables are cached across queries).
pub struct ActionEngine<'g> {
    pub group: &'g FiniteGroup,
    counting: Option<CountingContext>,
    node_budget: u64,
}

impl<'g> ActionEngine<'g> {
    pub fn new(group: &'g FiniteGroup) -> Self {
        let counting = CountingContext::new(group, DEFAULT_SUBGROUP_CAP).ok();
        ActionEngine {
            group,
            counting,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }

    pub fn with_node_budget(mut self, budget: u64) -> Self {
        self.node_budget = budget;
        self
    }

    fn screens_pass(&self, s: &Signature) -> bool {
        let orders = self.group.nontrivial_orders();
        s.periods.iter().all(|p| orders.contains(p))
    }

    /// Certified count of generating vectors for the signature (0 means
    /// none exists); error if the subgroup lattice was unavailable.
    pub fn vector_count(&mut self, s: &Signature) -> Result<BigInt> {
        if !self.screens_pass(s) {
            return Ok(BigInt::ZERO);
        }
        match &mut self.counting {
            Some(ctx) => ctx.count_generating_vectors(s.genus0, &s.periods),
            None => Err(Error::resource("subgroup lattice exceeded its cap")),
        }
    }

    /// Decide existence and extract a witness. Counting settles existence
    /// when the lattice is available; the backtracking search then only
    /// runs on instances known to have a solution. Without the lattice the
    /// search alone decides, and budget exhaustion is inconclusive.
    pub fn generating_vector(&mut self, s: &Signature) -> Result<VectorSearch> {
        if !self.screens_pass(s) {
            return Ok(VectorSearch::NoneExists);
        }
        let known_exists = match &mut self.counting {
            Some(ctx) => Some(ctx.count_generating_vectors(s.genus0, &s.periods)? > BigInt::ZERO),
            None => None,
        };
        if known_exists == Some(false) {
            return Ok(VectorSearch::NoneExists);
        }
        match self.search_witness(s)? {
            Some(v) => Ok(VectorSearch::Found(v)),
            None if known_exists == Some(true) => Err(Error::internal(
                "counting certifies existence but search found no witness",
            )),
            None if known_exists.is_none() => Ok(VectorSearch::Inconclusive),
            None => Ok(VectorSearch::NoneExists),
        }
    }

    /// Pure backtracking search, ignoring the counting context; an
    /// independent oracle for existence (None = exhausted, no witness).
    pub fn search_only(&self, s: &Signature) -> Result<Option<GeneratingVector>> {
        if !self.screens_pass(s) {
            return Ok(None);
        }
        self.search_witness(s)
    }

    fn search_witness(&self, s: &Signature) -> Result<Option<GeneratingVector>> {
        let g = self.group;
        let n = g.order();
        let g0 = s.genus0;
        let r = s.periods.len();
        // candidate pools: conjugating a whole vector preserves all the
        // defining properties, so the first cone generator may be pinned to
        // class representatives
        let classes = crate::group::conjugacy::ConjugacyData::new(g);
        let pool_for = |j: usize| -> Vec<usize> {
            let p = s.periods[j];
            if j == 0 && g0 == 0 {
                classes
                    .reps
                    .iter()
                    .copied()
                    .filter(|&x| g.order_of(x) == p)
                    .collect()
            } else {
                (0..n).filter(|&x| g.order_of(x) == p).collect()
            }
        };
        let mut slots: Vec<Vec<usize>> = Vec::new();
        for _ in 0..2 * g0 {
            slots.push((0..n).collect());
        }
        for j in 0..r {
            slots.push(pool_for(j));
        }
        let mut budget = self.node_budget;
        let mut tuple = vec![0usize; slots.len()];
        let found = self.dfs(s, &slots, 0, 0, &mut tuple, &mut budget)?;
        Ok(found)
    }

    /// `prod` carries the partial long product over completed slots
    /// (commutators are folded in when the second pair element lands).
    fn dfs(
        &self,
        s: &Signature,
        slots: &[Vec<usize>],
        idx: usize,
        prod: usize,
        tuple: &mut Vec<usize>,
        budget: &mut u64,
    ) -> Result<Option<GeneratingVector>> {
        let g = self.group;
        let g0 = s.genus0;
        let r = s.periods.len();
        if idx == slots.len() {
            if prod != 0 {
                return Ok(None);
            }
            if g.closure(tuple).len() != g.order() {
                return Ok(None);
            }
            return Ok(Some(GeneratingVector {
                a: (0..g0).map(|i| tuple[2 * i]).collect(),
                b: (0..g0).map(|i| tuple[2 * i + 1]).collect(),
                c: (2 * g0..2 * g0 + r).map(|i| tuple[i]).collect(),
            }));
        }
        if *budget == 0 {
            return Err(Error::Timeout("generating-vector search budget".into()));
        }
        // last cone point is forced by the long relation
        if r >= 1 && idx == slots.len() - 1 {
            *budget -= 1;
            let need = g.inv(prod);
            if g.order_of(need) != s.periods[r - 1] {
                return Ok(None);
            }
            tuple[idx] = need;
            return self.dfs(s, slots, idx + 1, g.mul(prod, need), tuple, budget);
        }
        for &x in &slots[idx] {
            *budget = budget.saturating_sub(1);
            if *budget == 0 {
                return Err(Error::Timeout("generating-vector search budget".into()));
            }
            tuple[idx] = x;
            let next_prod = if idx < 2 * g0 {
                if idx % 2 == 1 {
                    g.mul(prod, g.commutator(tuple[idx - 1], x))
                } else {
                    prod
                }
            } else {
                g.mul(prod, x)
            };
            if let Some(v) = self.dfs(s, slots, idx + 1, next_prod, tuple, budget)? {
                return Ok(Some(v));
            }
        }
        Ok(None)
    }

    /// Does the group act faithfully, preserving orientation, on genus g?
    pub fn acts_on_genus(&mut self, genus: usize) -> Result<bool> {
        for s in admissible_signatures(self.group, genus)? {
            if !self.screens_pass(&s) {
                continue;
            }
            match &mut self.counting {
                Some(ctx) => {
                    if ctx.count_generating_vectors(s.genus0, &s.periods)? > BigInt::ZERO {
                        return Ok(true);
                    }
                }
                None => match self.generating_vector(&s)? {
                    VectorSearch::Found(_) => return Ok(true),
                    VectorSearch::NoneExists => {}
                    VectorSearch::Inconclusive => {
                        return Err(Error::Timeout(format!(
                            "inconclusive at signature ({}; {:?})",
                            s.genus0, s.periods
                        )))
                    }
                },
            }
        }
        Ok(false)
    }

    /// First admissible signature admitting a generating vector, with an
    /// explicit validated witness.
    pub fn witness_for_genus(
        &mut self,
        genus: usize,
    ) -> Result<Option<(Signature, GeneratingVector)>> {
        for s in admissible_signatures(self.group, genus)? {
            if let VectorSearch::Found(v) = self.generating_vector(&s)? {
                v.validate(self.group, &s)?;
                return Ok(Some((s, v)));
            }
        }
        Ok(None)
    }

    pub fn genus_spectrum(&mut self, min: usize, max: usize, label: &str) -> Result<SpectrumReport> {
        if min < 2 || max < min {
            return Err(Error::invalid("spectrum range must satisfy 2 <= min <= max"));
        }
        let mut genera = Vec::new();
        let mut witnesses = BTreeMap::new();
        let words = self.group.element_words();
        for genus in min..=max {
            if let Some((s, v)) = self.witness_for_genus(genus)? {
                genera.push(genus);
                let vector: Vec<String> = v
                    .a
                    .iter()
                    .chain(&v.b)
                    .chain(&v.c)
                    .map(|&x| words[x].clone())
                    .collect();
                witnesses.insert(
                    genus,
                    WitnessReport {
                        g0: s.genus0,
                        periods: s.periods.clone(),
                        vector,
                        method: if self.counting.is_some() {
                            "counting".into()
                        } else {
                            "search".into()
                        },
                    },
                );
            }
        }
        Ok(SpectrumReport {
            schema: "torsion-obstruct/1".into(),
            group: label.to_string(),
            min_genus: min,
            max_genus: max,
            genera,
            witnesses,
        })
    }

    /// Least hyperbolic genus (>= 2) with a faithful action, searched up to
    /// the ceiling (default 1 + |G|).
    pub fn strong_symmetric_genus(&mut self, ceiling: Option<usize>) -> Result<usize> {
        let ceiling = ceiling.unwrap_or(self.group.order() + 1);
        for genus in 2..=ceiling {
            if self.acts_on_genus(genus)? {
                return Ok(genus);
            }
        }
        Err(Error::resource(format!(
            "no action found up to the genus ceiling {ceiling}"
        )))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub g0: usize,
    pub periods: Vec<usize>,
    pub vector: Vec<String>,
    pub method: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub schema: String,
    pub group: String,
    pub min_genus: usize,
    pub max_genus: usize,
    pub genera: Vec<usize>,
    pub witnesses: BTreeMap<usize, WitnessReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaSpectrumReport {
    pub genus: usize,
    pub group: String,
    pub range: (usize, usize),
    pub spectrum: Vec<usize>,
    pub pass: bool,
    pub witness: Option<WitnessReport>,
}

/// The even/odd spectrum-gap check: for even g the dicyclic group DC_g has
/// spectrum {g} within [2, 2g-2] with witness signature (0;4,4,2g); for odd
/// g >= 3 the group C4 x D_g has spectrum {g} within [2, 2g].
pub fn verify_spectrum_gap(genus: usize) -> Result<LemmaSpectrumReport> {
    use crate::group::constructors::{direct_product, make_cyclic, make_dicyclic, make_dihedral};
    if genus < 2 {
        return Err(Error::invalid("spectrum-gap check requires genus >= 2"));
    }
    let (group, label, hi) = if genus % 2 == 0 {
        (make_dicyclic(genus)?, format!("DC({genus})"), 2 * genus - 2)
    } else {
        (
            direct_product(&make_cyclic(4)?, &make_dihedral(genus)?)?,
            format!("C4 x D{genus}"),
            2 * genus,
        )
    };
    let mut engine = ActionEngine::new(&group);
    let report = engine.genus_spectrum(2, hi, &label)?;
    let pass = report.genera == vec![genus];
    let witness = report.witnesses.get(&genus).cloned();
    if genus % 2 == 0 {
        if let Some(w) = &witness {
            if !(w.g0 == 0 && w.periods == vec![4, 4, 2 * genus]) {
                return Err(Error::Verification(format!(
                    "unexpected witness signature ({}; {:?})",
                    w.g0, w.periods
                )));
            }
        }
    }
    Ok(LemmaSpectrumReport {
        genus,
        group: label,
        range: (2, hi),
        spectrum: report.genera,
        pass,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::constructors::*;

    #[test]
    fn areas() {
        let s = Signature::new(0, vec![4, 4, 8]).unwrap();
        assert_eq!(s.normalized_area(), Rational64::new(3, 8));
        let s = Signature::new(1, vec![]).unwrap();
        assert_eq!(s.normalized_area(), Rational64::from_integer(0));
        let s = Signature::new(0, vec![2, 3, 7]).unwrap();
        assert_eq!(s.normalized_area(), Rational64::new(1, 42));
        assert_eq!(
            genus_of_action(16, &Signature::new(0, vec![4, 4, 8]).unwrap()),
            Rational64::from_integer(4)
        );
        assert_eq!(
            genus_of_action(10, &Signature::new(2, vec![]).unwrap()),
            Rational64::from_integer(11)
        );
    }

    #[test]
    fn admissible_examples() {
        // DC_4 at genus 4 contains (0;4,4,8)
        let dc4 = make_dicyclic(4).unwrap();
        let sigs = admissible_signatures(&dc4, 4).unwrap();
        assert!(sigs.contains(&Signature::new(0, vec![4, 4, 8]).unwrap()));
        // C2 at genus 2: (0;2^6) and (1;2,2)
        let c2 = make_cyclic(2).unwrap();
        let sigs = admissible_signatures(&c2, 2).unwrap();
        assert!(sigs.contains(&Signature::new(0, vec![2; 6]).unwrap()));
        assert!(sigs.contains(&Signature::new(1, vec![2, 2]).unwrap()));
        assert_eq!(sigs.len(), 2);
        // below the Hurwitz bound nothing is admissible
        let big = make_sl2(5).unwrap(); // order 120 > 84(2-2+1)... genus 2: 84 < 120
        assert!(admissible_signatures(&big, 2).unwrap().is_empty());
    }

    #[test]
    fn dicyclic_genus_four_witness() {
        let dc4 = make_dicyclic(4).unwrap();
        let mut e = ActionEngine::new(&dc4);
        let s = Signature::new(0, vec![4, 4, 8]).unwrap();
        match e.generating_vector(&s).unwrap() {
            VectorSearch::Found(v) => v.validate(&dc4, &s).unwrap(),
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn c2_small_cases() {
        let c2 = make_cyclic(2).unwrap();
        let mut e = ActionEngine::new(&c2);
        let s = Signature::new(0, vec![2, 2, 2, 2, 2, 2]).unwrap();
        match e.generating_vector(&s).unwrap() {
            VectorSearch::Found(v) => {
                assert_eq!(v.c, vec![1; 6]);
            }
            other => panic!("{other:?}"),
        }
        assert!(e.acts_on_genus(2).unwrap());
    }

    #[test]
    fn accola_maclachlan_genus_three() {
        // C2 x C8 acts on genus 3
        let g = direct_product(&make_cyclic(2).unwrap(), &make_cyclic(8).unwrap()).unwrap();
        let mut e = ActionEngine::new(&g);
        assert!(e.acts_on_genus(3).unwrap());
    }

    #[test]
    fn spectrum_gap_even_four() {
        let rep = verify_spectrum_gap(4).unwrap();
        assert!(rep.pass, "{rep:?}");
        let w = rep.witness.unwrap();
        assert_eq!((w.g0, w.periods), (0, vec![4, 4, 8]));
    }

    #[test]
    fn spectrum_gap_odd_three() {
        let rep = verify_spectrum_gap(3).unwrap();
        assert!(rep.pass, "{rep:?}");
    }

    #[test]
    fn strong_symmetric_genus_examples() {
        let dc4 = make_dicyclic(4).unwrap();
        assert_eq!(ActionEngine::new(&dc4).strong_symmetric_genus(None).unwrap(), 4);
        // Q8 = DC_2: classical value 2
        let q8 = make_dicyclic(2).unwrap();
        assert_eq!(ActionEngine::new(&q8).strong_symmetric_genus(None).unwrap(), 2);
    }

    #[test]
    fn existence_agrees_with_search_dual_oracle() {
        // counting-based existence vs. raw backtracking on small instances
        let groups = [
            make_dihedral(3).unwrap(),
            make_dicyclic(2).unwrap(),
            make_cyclic(8).unwrap(),
            make_alternating4().unwrap(),
        ];
        for g in &groups {
            for genus in 2..=5 {
                for s in admissible_signatures(g, genus).unwrap() {
                    let mut with = ActionEngine::new(g);
                    let by_count = with.vector_count(&s).unwrap() > BigInt::ZERO;
                    let by_search = with.search_witness(&s).unwrap().is_some();
                    assert_eq!(
                        by_count, by_search,
                        "order {} signature ({}; {:?})",
                        g.order(),
                        s.genus0,
                        s.periods
                    );
                }
            }
        }
    }
}
