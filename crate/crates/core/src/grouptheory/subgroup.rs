use crate::util::Bitset;

use super::{FiniteGroup, GroupError};

/// A subgroup held as the sorted indices of its elements in the parent
/// group. Always contains 0 and is closed under the parent multiplication.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    elements: Vec<u32>,
}

impl Subgroup {
    pub fn trivial() -> Subgroup {
        Subgroup { elements: vec![0] }
    }

    pub fn whole(g: &FiniteGroup) -> Subgroup {
        Subgroup {
            elements: (0..g.order() as u32).collect(),
        }
    }

    /// Validate a candidate element set; closure under multiplication is
    /// enough in a finite group.
    pub fn from_elements<I>(g: &FiniteGroup, it: I) -> Result<Subgroup, GroupError>
    where
        I: IntoIterator<Item = u32>,
    {
        let mut elements: Vec<u32> = it.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        for &e in &elements {
            if e as usize >= g.order() {
                return Err(GroupError::ElementRange(e));
            }
        }
        if elements.binary_search(&0).is_err() {
            return Err(GroupError::NotClosed(0, 0));
        }
        for &a in &elements {
            for &b in &elements {
                if elements.binary_search(&g.mul(a, b)).is_err() {
                    return Err(GroupError::NotClosed(a, b));
                }
            }
        }
        Ok(Subgroup { elements })
    }

    /// Subgroup generated by a set of elements.
    pub fn generated(g: &FiniteGroup, gens: &[u32]) -> Subgroup {
        Subgroup {
            elements: g.closure(gens),
        }
    }

    /// Construct without validation; caller guarantees closure.
    pub(crate) fn from_sorted_unchecked(elements: Vec<u32>) -> Subgroup {
        Subgroup { elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn contains(&self, e: u32) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub(crate) fn bitset(&self, capacity: usize) -> Bitset {
        Bitset::from_indices(capacity, self.elements.iter().copied())
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.elements.len() && j < other.elements.len() {
            match self.elements[i].cmp(&other.elements[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(self.elements[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        Subgroup { elements: out }
    }

    pub fn intersection_order(&self, other: &Subgroup) -> usize {
        let mut count = 0;
        let (mut i, mut j) = (0, 0);
        while i < self.elements.len() && j < other.elements.len() {
            match self.elements[i].cmp(&other.elements[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.intersection_order(other) == self.order()
    }

    pub fn is_normal(&self, g: &FiniteGroup) -> bool {
        for x in 0..g.order() as u32 {
            for &h in &self.elements {
                if !self.contains(g.conjugate(h, x)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_abelian(&self, g: &FiniteGroup) -> bool {
        for (i, &a) in self.elements.iter().enumerate() {
            for &b in &self.elements[i + 1..] {
                if g.mul(a, b) != g.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    /// All right cosets S·g, each as its least representative, sorted.
    pub fn right_coset_reps(&self, g: &FiniteGroup) -> Vec<u32> {
        let mut seen = Bitset::new(g.order());
        let mut reps = Vec::with_capacity(g.order() / self.order());
        for x in 0..g.order() as u32 {
            if seen.get(x as usize) {
                continue;
            }
            reps.push(x);
            for &s in &self.elements {
                seen.set(g.mul(s, x) as usize);
            }
        }
        reps
    }

    /// Least element of the right coset S·x.
    pub fn right_coset_rep_of(&self, g: &FiniteGroup, x: u32) -> u32 {
        self.elements.iter().map(|&s| g.mul(s, x)).min().unwrap()
    }

    /// Elements of the right coset S·x in sorted order.
    pub fn right_coset(&self, g: &FiniteGroup, x: u32) -> Vec<u32> {
        let mut c: Vec<u32> = self.elements.iter().map(|&s| g.mul(s, x)).collect();
        c.sort_unstable();
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouptheory::cyclic;

    #[test]
    fn validation_catches_open_sets() {
        let g = cyclic(9).unwrap();
        assert!(Subgroup::from_elements(&g, [0, 3, 6]).is_ok());
        assert!(matches!(
            Subgroup::from_elements(&g, [0, 3, 5]),
            Err(GroupError::NotClosed(..))
        ));
        assert!(matches!(
            Subgroup::from_elements(&g, [3, 6]),
            Err(GroupError::NotClosed(0, 0))
        ));
    }

    #[test]
    fn cosets_partition_the_group() {
        let g = cyclic(9).unwrap();
        let h = Subgroup::generated(&g, &[3]);
        let reps = h.right_coset_reps(&g);
        assert_eq!(reps, vec![0, 1, 2]);
        assert_eq!(h.right_coset_rep_of(&g, 7), 1);
    }

    #[test]
    fn intersection_is_sorted_merge() {
        let g = cyclic(12).unwrap();
        let a = Subgroup::generated(&g, &[2]);
        let b = Subgroup::generated(&g, &[3]);
        assert_eq!(a.intersect(&b).elements(), &[0, 6]);
        assert_eq!(a.intersection_order(&b), 2);
    }
}
