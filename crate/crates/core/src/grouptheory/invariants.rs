use std::collections::BTreeSet;

use super::enumerate::{all_proper_subgroups, subgroups_of_order};
use super::table::prime_power_base;
use super::{FiniteGroup, GroupError, Subgroup};

/// Structural fingerprint of a finite group.
#[derive(Debug, Clone)]
pub struct GroupInvariants {
    pub center: Subgroup,
    pub derived: Subgroup,
    pub frattini: Subgroup,
    /// γ₁ = G, γ₂ = [G,G], γ_{i+1} = [γ_i, G], until stable.
    pub lower_central_series: Vec<Subgroup>,
    /// Least c with γ_{c+1} = 1; None when the series stalls above 1.
    pub nilpotency_class: Option<usize>,
    pub exponent: usize,
    /// Size of a minimal generating set, log_p |G : Φ(G)| (p-groups only).
    pub min_generators: Option<u32>,
}

pub fn center(g: &FiniteGroup) -> Subgroup {
    let n = g.order() as u32;
    let els = (0..n).filter(|&z| (0..n).all(|x| g.mul(x, z) == g.mul(z, x)));
    Subgroup::from_sorted_unchecked(els.collect())
}

pub fn derived_subgroup(g: &FiniteGroup) -> Subgroup {
    let n = g.order() as u32;
    let mut comms = BTreeSet::new();
    for a in 0..n {
        for b in a + 1..n {
            comms.insert(g.commutator(a, b));
        }
    }
    let gens: Vec<u32> = comms.into_iter().collect();
    Subgroup::generated(g, &gens)
}

fn commutator_subgroup(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let mut comms = BTreeSet::new();
    for &a in h.elements() {
        for b in 0..g.order() as u32 {
            comms.insert(g.commutator(a, b));
        }
    }
    let gens: Vec<u32> = comms.into_iter().collect();
    Subgroup::generated(g, &gens)
}

pub fn lower_central_series(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut series = vec![Subgroup::whole(g)];
    loop {
        let next = commutator_subgroup(g, series.last().unwrap());
        if &next == series.last().unwrap() {
            break;
        }
        series.push(next);
        if series.last().unwrap().is_trivial() {
            break;
        }
    }
    series
}

/// Φ(G) as the intersection of all maximal subgroups. For p-groups the
/// maximal subgroups are exactly those of index p; otherwise the whole
/// proper-subgroup lattice is scanned.
pub fn frattini_by_maximal_intersection(g: &FiniteGroup) -> Result<Subgroup, GroupError> {
    let n = g.order();
    if n == 1 {
        return Ok(Subgroup::trivial());
    }
    let maximals: Vec<Subgroup> = if let Some(p) = prime_power_base(n) {
        subgroups_of_order(g, n / p as usize)?
    } else {
        let all = all_proper_subgroups(g, super::enumerate::DEFAULT_SUBGROUP_LIMIT)?;
        all.iter()
            .filter(|h| all.iter().all(|k| k == *h || !h.is_subset_of(k)))
            .cloned()
            .collect()
    };
    let mut acc = Subgroup::whole(g);
    for m in &maximals {
        acc = acc.intersect(m);
    }
    Ok(acc)
}

/// G'·G^p, the closed-form Frattini subgroup of a p-group.
pub fn frattini_by_formula(g: &FiniteGroup, p: u64) -> Subgroup {
    let derived = derived_subgroup(g);
    let mut gens: Vec<u32> = derived.elements().to_vec();
    gens.extend((0..g.order() as u32).map(|x| g.pow(x, p as usize)));
    Subgroup::generated(g, &gens)
}

pub fn structural_invariants(g: &FiniteGroup) -> Result<GroupInvariants, GroupError> {
    let center = center(g);
    let derived = derived_subgroup(g);
    let series = lower_central_series(g);
    let nilpotency_class = series
        .last()
        .unwrap()
        .is_trivial()
        .then(|| series.len() - 1);
    let frattini = frattini_by_maximal_intersection(g)?;
    let min_generators = g.p_group_prime().map(|p| {
        let index = (g.order() / frattini.order()) as u64;
        let mut k = 0;
        let mut m = 1u64;
        while m < index {
            m *= p;
            k += 1;
        }
        k
    });
    if let Some(p) = g.p_group_prime() {
        // cross-check against the closed form for p-groups
        let formula = frattini_by_formula(g, p);
        debug_assert_eq!(formula, frattini, "Frattini routes disagree");
    }
    Ok(GroupInvariants {
        center,
        derived,
        frattini,
        lower_central_series: series,
        nilpotency_class,
        exponent: g.exponent(),
        min_generators,
    })
}

/// True iff Z(G) = G' = Φ(G) with |Z(G)| = p. Errors on non-p-groups.
pub fn is_extraspecial(g: &FiniteGroup) -> Result<bool, GroupError> {
    let Some(p) = g.p_group_prime() else {
        return Err(GroupError::NotPGroup(g.order()));
    };
    let inv = structural_invariants(g)?;
    Ok(inv.center.order() == p as usize
        && inv.center == inv.derived
        && inv.center == inv.frattini)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouptheory::{cyclic, direct_product, heisenberg};

    fn elementary_abelian_3_5() -> FiniteGroup {
        let c3 = cyclic(3).unwrap();
        let mut g = c3.clone();
        for _ in 0..4 {
            g = direct_product(&g, &c3).unwrap();
        }
        g
    }

    #[test]
    fn elementary_abelian_invariants() {
        let g = elementary_abelian_3_5();
        let inv = structural_invariants(&g).unwrap();
        assert_eq!(inv.center.order(), 243);
        assert!(inv.derived.is_trivial());
        assert!(inv.frattini.is_trivial());
        assert_eq!(inv.nilpotency_class, Some(1));
        assert_eq!(inv.exponent, 3);
        assert_eq!(inv.min_generators, Some(5));
        assert!(!is_extraspecial(&g).unwrap());
    }

    #[test]
    fn c9_invariants() {
        let g = cyclic(9).unwrap();
        let inv = structural_invariants(&g).unwrap();
        assert_eq!(inv.exponent, 9);
        assert_eq!(inv.frattini.order(), 3);
        assert_eq!(inv.frattini, Subgroup::generated(&g, &[3]));
        assert_eq!(inv.min_generators, Some(1));
    }

    #[test]
    fn heisenberg_27_is_extraspecial() {
        let mg = heisenberg(3).unwrap();
        let inv = structural_invariants(&mg.group).unwrap();
        assert_eq!(inv.center.order(), 3);
        assert_eq!(inv.center, inv.derived);
        assert_eq!(inv.center, inv.frattini);
        assert_eq!(inv.nilpotency_class, Some(2));
        assert_eq!(inv.exponent, 3);
        assert!(is_extraspecial(&mg.group).unwrap());
    }

    #[test]
    fn central_factor_blocks_extraspecial() {
        let mg = heisenberg(3).unwrap();
        let g = direct_product(&cyclic(3).unwrap(), &mg.group).unwrap();
        // center grows to order 9
        assert!(!is_extraspecial(&g).unwrap());
        assert_eq!(center(&g).order(), 9);
    }

    #[test]
    fn non_p_group_is_rejected_by_extraspecial_test() {
        let g = direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap()).unwrap();
        assert!(matches!(
            is_extraspecial(&g),
            Err(GroupError::NotPGroup(6))
        ));
    }

    #[test]
    fn frattini_routes_agree_on_p_groups() {
        for g in [
            cyclic(27).unwrap(),
            heisenberg(3).unwrap().group,
            direct_product(&cyclic(9).unwrap(), &cyclic(3).unwrap()).unwrap(),
        ] {
            let a = frattini_by_maximal_intersection(&g).unwrap();
            let b = frattini_by_formula(&g, 3);
            assert_eq!(a, b);
        }
    }
}
