//! Conjugacy classes with a deterministic ordering: the identity class
//! first, the rest by their minimal element index.

use super::FiniteGroup;

#[derive(Clone, Debug)]
pub struct ConjugacyData {
    pub classes: Vec<Vec<usize>>,
    /// minimal element of each class
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
    pub class_of: Vec<usize>,
}

impl ConjugacyData {
    pub fn new(g: &FiniteGroup) -> Self {
        let n = g.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[x] = id;
            let mut members = vec![x];
            let mut stack = vec![x];
            while let Some(y) = stack.pop() {
                for t in 0..n {
                    let z = g.conjugate(t, y);
                    if class_of[z] == usize::MAX {
                        class_of[z] = id;
                        members.push(z);
                        stack.push(z);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        let reps = classes.iter().map(|c| c[0]).collect();
        let sizes = classes.iter().map(|c| c.len()).collect();
        ConjugacyData {
            classes,
            reps,
            sizes,
            class_of,
        }
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Class index of rep^s for each class. Well defined because conjugation
    /// commutes with powers.
    pub fn power_map(&self, g: &FiniteGroup, s: i64) -> Vec<usize> {
        self.reps
            .iter()
            .map(|&r| self.class_of[g.pow(r, s)])
            .collect()
    }

    /// Class containing the inverses of class i.
    pub fn inverse_class(&self, g: &FiniteGroup, i: usize) -> usize {
        self.class_of[g.inv(self.reps[i])]
    }

    pub fn sizes_sorted(&self) -> Vec<usize> {
        let mut v = self.sizes.clone();
        v.sort_unstable();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::super::constructors::*;
    use super::*;

    #[test]
    fn symmetric_group_s3() {
        let g = make_dihedral(3).unwrap();
        let c = ConjugacyData::new(&g);
        assert_eq!(c.num_classes(), 3);
        assert_eq!(c.sizes_sorted(), vec![1, 2, 3]);
        assert_eq!(c.classes[0], vec![0]);
    }

    #[test]
    fn quaternion_classes() {
        let q8 = make_dicyclic(2).unwrap();
        let c = ConjugacyData::new(&q8);
        assert_eq!(c.num_classes(), 5);
        assert_eq!(c.sizes_sorted(), vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let g = make_cyclic(9).unwrap();
        let c = ConjugacyData::new(&g);
        assert_eq!(c.num_classes(), 9);
        assert!(c.sizes.iter().all(|&s| s == 1));
        // power map on C9: class of x^3 from class of x
        let pm = c.power_map(&g, 3);
        assert_eq!(pm[1], c.class_of[g.pow(1, 3)]);
    }

    #[test]
    fn class_sizes_divide_order() {
        for g in [
            make_dihedral(6).unwrap(),
            make_dicyclic(3).unwrap(),
            make_semidirect(5, 4, 2).unwrap(),
        ] {
            let c = ConjugacyData::new(&g);
            assert_eq!(c.sizes.iter().sum::<usize>(), g.order());
            for &s in &c.sizes {
                assert_eq!(g.order() % s, 0);
            }
        }
    }
}
