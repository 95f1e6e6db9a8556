use crate::util::Bitset;

use super::GroupError;

/// Largest group order the artifact accepts; covers 3⁵ = 243 and 5⁵ = 3125
/// while keeping every table and search in memory.
pub const MAX_GROUP_ORDER: usize = 3500;

/// A finite group given by its full multiplication table.
///
/// Element 0 is always the identity. Construction validates the Latin
/// square property and associativity, so a value of this type is a group,
/// not merely a magma. Optional labels carry a human-readable name per
/// element (for matrix groups, the defining parameters).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    pub fn from_table(
        order: usize,
        table: Vec<u32>,
        labels: Option<Vec<String>>,
    ) -> Result<FiniteGroup, GroupError> {
        if order == 0 || table.len() != order * order {
            return Err(GroupError::TableShape);
        }
        if order > MAX_GROUP_ORDER {
            return Err(GroupError::OrderCap(order));
        }
        if let Some(l) = &labels {
            if l.len() != order {
                return Err(GroupError::TableShape);
            }
        }
        let at = |i: usize, j: usize| table[i * order + j];
        for i in 0..order {
            for j in 0..order {
                if at(i, j) as usize >= order {
                    return Err(GroupError::EntryRange(i, j));
                }
            }
        }
        for j in 0..order {
            if at(0, j) as usize != j {
                return Err(GroupError::IdentityNotZero(j));
            }
            if at(j, 0) as usize != j {
                return Err(GroupError::IdentityNotZero(j));
            }
        }
        for i in 0..order {
            let mut row = Bitset::new(order);
            let mut col = Bitset::new(order);
            for j in 0..order {
                let r = at(i, j) as usize;
                if row.get(r) {
                    return Err(GroupError::NotLatin { axis: "row", index: i });
                }
                row.set(r);
                let c = at(j, i) as usize;
                if col.get(c) {
                    return Err(GroupError::NotLatin { axis: "column", index: i });
                }
                col.set(c);
            }
        }

        verify_associativity(order, &table)?;

        let mut inverse = vec![0u32; order];
        for i in 0..order {
            let j = (0..order)
                .find(|&j| at(i, j) == 0)
                .expect("Latin square row contains the identity");
            inverse[i] = j as u32;
        }
        Ok(FiniteGroup {
            order,
            table,
            inverse,
            labels,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    /// a⁻¹ b⁻¹ a b.
    pub fn commutator(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// g⁻¹ h g.
    pub fn conjugate(&self, h: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), h), g)
    }

    pub fn pow(&self, a: u32, e: usize) -> u32 {
        let mut acc = 0u32;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: u32) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least n with gⁿ = 1 for all g.
    pub fn exponent(&self) -> usize {
        let mut e: usize = 1;
        for a in 0..self.order as u32 {
            let o = self.element_order(a);
            e = e / gcd(e, o) * o;
        }
        e
    }

    /// The prime p if the order is a nontrivial power of p.
    pub fn p_group_prime(&self) -> Option<u64> {
        prime_power_base(self.order)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label_of(&self, a: u32) -> String {
        match &self.labels {
            Some(l) => l[a as usize].clone(),
            None => format!("g{a}"),
        }
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
    }

    /// Closure of a set under multiplication, as sorted indices. Valid for
    /// subgroups because the group is finite.
    pub fn closure(&self, seed: &[u32]) -> Vec<u32> {
        let mut seen = Bitset::new(self.order);
        seen.set(0);
        let mut out = vec![0u32];
        let mut queue: Vec<u32> = Vec::new();
        for &s in seed {
            if !seen.get(s as usize) {
                seen.set(s as usize);
                out.push(s);
                queue.push(s);
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            let snapshot = out.clone();
            for &y in &snapshot {
                for z in [self.mul(x, y), self.mul(y, x)] {
                    if !seen.get(z as usize) {
                        seen.set(z as usize);
                        out.push(z);
                        queue.push(z);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// A small generating set, chosen greedily by least index.
    pub fn generators(&self) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut gen_set = self.closure(&[]);
        for x in 1..self.order as u32 {
            if gen_set.binary_search(&x).is_err() {
                gens.push(x);
                gen_set = self.closure(&gens);
                if gen_set.len() == self.order {
                    break;
                }
            }
        }
        gens
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn prime_power_base(n: usize) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            return (m == 1).then_some(p as u64);
        }
        p += 1;
    }
    Some(m as u64)
}

/// Light's associativity test: with S a generating set of the magma, the
/// operation is associative iff (x·a)·y = x·(a·y) for every a in S and all
/// x, y. The generating set is grown greedily under the raw operation, so
/// no associativity is assumed while finding it.
fn verify_associativity(order: usize, table: &[u32]) -> Result<(), GroupError> {
    let at = |i: u32, j: u32| table[i as usize * order + j as usize];

    let mut gens: Vec<u32> = Vec::new();
    let mut reach = Bitset::new(order);
    reach.set(0);
    let mut members = vec![0u32];
    for x in 1..order as u32 {
        if reach.get(x as usize) {
            continue;
        }
        gens.push(x);
        // magma closure of gens: saturate pairwise products
        reach.set(x as usize);
        members.push(x);
        let mut head = members.len() - 1;
        while head < members.len() {
            let a = members[head];
            head += 1;
            for idx in 0..members.len() {
                let b = members[idx];
                for z in [at(a, b), at(b, a)] {
                    if !reach.get(z as usize) {
                        reach.set(z as usize);
                        members.push(z);
                    }
                }
            }
        }
        if members.len() == order {
            break;
        }
    }

    for &a in &gens {
        for x in 0..order as u32 {
            let xa = at(x, a);
            for y in 0..order as u32 {
                if at(xa, y) != at(x, at(a, y)) {
                    return Err(GroupError::NotAssociative(x, a, y));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouptheory::cyclic;

    #[test]
    fn cyclic_tables_validate() {
        let g = cyclic(243).unwrap();
        assert_eq!(g.order(), 243);
        assert_eq!(g.exponent(), 243);
        assert_eq!(g.element_order(1), 243);
        assert_eq!(g.inv(1), 242);
    }

    #[test]
    fn latin_square_violation_detected() {
        // row 1 repeats an entry
        let table = vec![0, 1, 2, 1, 1, 0, 2, 0, 1];
        assert!(matches!(
            FiniteGroup::from_table(3, table, None),
            Err(GroupError::NotLatin { .. })
        ));
    }

    #[test]
    fn identity_must_sit_at_zero() {
        // C3 with rows permuted so that row 0 is not the identity
        let table = vec![1, 2, 0, 2, 0, 1, 0, 1, 2];
        assert!(matches!(
            FiniteGroup::from_table(3, table, None),
            Err(GroupError::IdentityNotZero(_))
        ));
    }

    #[test]
    fn nonassociative_loop_rejected() {
        // a loop of order 5: Latin with identity 0, but 1·1 = 0 forces an
        // element of order 2, impossible in a group of order 5
        #[rustfmt::skip]
        let table = vec![
            0, 1, 2, 3, 4,
            1, 0, 3, 4, 2,
            2, 3, 4, 0, 1,
            3, 4, 1, 2, 0,
            4, 2, 0, 1, 3,
        ];
        assert!(matches!(
            FiniteGroup::from_table(5, table, None),
            Err(GroupError::NotAssociative(..))
        ));
    }

    #[test]
    fn closure_and_generators() {
        let g = cyclic(9).unwrap();
        assert_eq!(g.closure(&[3]), vec![0, 3, 6]);
        assert_eq!(g.generators(), vec![1]);
    }

    #[test]
    fn order_cap_enforced() {
        let n = MAX_GROUP_ORDER + 1;
        let table = vec![0u32; n * n];
        assert!(matches!(
            FiniteGroup::from_table(n, table, None),
            Err(GroupError::OrderCap(_))
        ));
    }
}
