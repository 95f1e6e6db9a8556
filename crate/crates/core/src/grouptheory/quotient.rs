use super::{FiniteGroup, GroupError, Subgroup};

/// A quotient group together with the projection map and the canonical
/// (least-index) coset representatives, so elements can be pushed down
/// and lifted back.
#[derive(Debug, Clone)]
pub struct QuotientGroup {
    pub group: FiniteGroup,
    /// parent element -> coset index
    pub projection: Vec<u32>,
    /// coset index -> least parent representative
    pub reps: Vec<u32>,
}

impl QuotientGroup {
    pub fn project(&self, g: u32) -> u32 {
        self.projection[g as usize]
    }

    pub fn lift(&self, coset: u32) -> u32 {
        self.reps[coset as usize]
    }
}

/// G/N with canonical representatives; verifies normality.
pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<QuotientGroup, GroupError> {
    for x in 0..g.order() as u32 {
        for &h in n.elements() {
            let c = g.conjugate(h, x);
            if !n.contains(c) {
                return Err(GroupError::NotNormal(h, x));
            }
        }
    }
    let order = g.order() / n.order();
    let mut projection = vec![u32::MAX; g.order()];
    let mut reps: Vec<u32> = Vec::with_capacity(order);
    for x in 0..g.order() as u32 {
        if projection[x as usize] != u32::MAX {
            continue;
        }
        let idx = reps.len() as u32;
        reps.push(x);
        for &s in n.elements() {
            projection[g.mul(s, x) as usize] = idx;
        }
    }
    debug_assert_eq!(reps.len(), order);
    // reps are discovered in increasing parent order, so rep 0 is the
    // identity coset and coset indices are canonical
    let mut table = vec![0u32; order * order];
    for (i, &ri) in reps.iter().enumerate() {
        for (j, &rj) in reps.iter().enumerate() {
            table[i * order + j] = projection[g.mul(ri, rj) as usize];
        }
    }
    let labels = reps
        .iter()
        .map(|&r| format!("{}N", g.label_of(r)))
        .collect();
    let group = FiniteGroup::from_table(order, table, Some(labels))?;
    Ok(QuotientGroup {
        group,
        projection,
        reps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouptheory::cyclic;

    #[test]
    fn c9_over_c3_is_c3() {
        let g = cyclic(9).unwrap();
        let n = Subgroup::generated(&g, &[3]);
        let q = quotient(&g, &n).unwrap();
        assert_eq!(q.group.order(), 3);
        assert_eq!(q.group.exponent(), 3);
        assert_eq!(q.project(4), q.project(7));
        assert_eq!(q.lift(0), 0);
    }

    #[test]
    fn quotient_by_whole_group_is_trivial() {
        let g = cyclic(9).unwrap();
        let q = quotient(&g, &Subgroup::whole(&g)).unwrap();
        assert_eq!(q.group.order(), 1);
    }
}
