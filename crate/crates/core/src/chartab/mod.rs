//! Exact complex character tables of finite groups.
//!
//! The table is computed modulo a large prime (Dixon's method) and then
//! lifted to exact cyclotomic integers in `Z[zeta_e]`, `e` the group
//! exponent. Columns follow the deterministic conjugacy-class order; rows
//! are sorted by degree, ties broken by the value vectors, so the table is
//! reproducible byte-for-byte.

pub mod dixon;
pub mod embed;
pub mod indicators;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::conjugacy::ConjugacyData;
use crate::group::FiniteGroup;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Character {
    pub degree: usize,
    /// one value per conjugacy class, conductor = table conductor
    pub values: Vec<Cyclotomic>,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    /// group exponent; every value lives in Z[zeta_conductor]
    pub conductor: usize,
    pub classes: ConjugacyData,
    pub rows: Vec<Character>,
}

impl CharacterTable {
    pub fn new(g: &FiniteGroup) -> Result<Self> {
        let classes = ConjugacyData::new(g);
        let conductor = g.exponent();
        let rows = dixon::irreducible_characters(g, &classes, conductor)?;
        Ok(CharacterTable {
            conductor,
            classes,
            rows,
        })
    }

    pub fn num_classes(&self) -> usize {
        self.classes.num_classes()
    }

    pub fn value(&self, row: usize, class: usize) -> &Cyclotomic {
        &self.rows[row].values[class]
    }

    pub fn value_on_element(&self, row: usize, elem: usize) -> &Cyclotomic {
        &self.rows[row].values[self.classes.class_of[elem]]
    }

    /// Index of the trivial character.
    pub fn trivial_row(&self) -> usize {
        let one = Cyclotomic::one(self.conductor);
        self.rows
            .iter()
            .position(|r| r.degree == 1 && r.values.iter().all(|v| *v == one))
            .expect("every table contains the trivial character")
    }

    /// Hermitian inner product of two class functions given by per-class
    /// values; exact, errors if |G| does not divide the sum (which cannot
    /// happen for genuine characters).
    pub fn inner_product_values(
        &self,
        g: &FiniteGroup,
        a: &[Cyclotomic],
        b: &[Cyclotomic],
    ) -> Result<Cyclotomic> {
        let mut acc = Cyclotomic::zero(self.conductor);
        for l in 0..self.num_classes() {
            let term = a[l].mul(&b[l].conj()).scale(self.classes.sizes[l] as i128);
            acc = acc.add(&term);
        }
        acc.div_exact(g.order() as i128)
            .ok_or_else(|| Error::internal("inner product is not integral"))
    }

    /// `<chi_a, chi_b>` for two rows; 0 or 1 by orthonormality.
    pub fn inner_product(&self, g: &FiniteGroup, a: usize, b: usize) -> Result<i128> {
        self.inner_product_values(g, &self.rows[a].values, &self.rows[b].values)?
            .as_integer()
            .ok_or_else(|| Error::internal("inner product of characters is not rational"))
    }

    /// Multiplicity of each irreducible in a class function.
    pub fn decompose(&self, g: &FiniteGroup, values: &[Cyclotomic]) -> Result<Vec<i128>> {
        (0..self.rows.len())
            .map(|i| {
                self.inner_product_values(g, values, &self.rows[i].values)?
                    .as_integer()
                    .ok_or_else(|| Error::internal("multiplicity is not a rational integer"))
            })
            .collect()
    }
}
