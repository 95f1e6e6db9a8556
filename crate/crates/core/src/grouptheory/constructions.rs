use super::invariants::center;
use super::{quotient, FiniteGroup, GroupError, Subgroup, MAX_GROUP_ORDER};

/// Cyclic group of order n, written additively.
pub fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    let mut table = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = ((i + j) % n) as u32;
        }
    }
    FiniteGroup::from_table(n, table, None)
}

/// Direct product A × B with index (a, b) -> a·|B| + b.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    if n > MAX_GROUP_ORDER {
        return Err(GroupError::OrderCap(n));
    }
    let mut table = vec![0u32; n * n];
    for i in 0..n {
        let (ia, ib) = ((i / nb) as u32, (i % nb) as u32);
        for j in 0..n {
            let (ja, jb) = ((j / nb) as u32, (j % nb) as u32);
            let pa = a.mul(ia, ja) as usize;
            let pb = b.mul(ib, jb) as usize;
            table[i * n + j] = (pa * nb + pb) as u32;
        }
    }
    FiniteGroup::from_table(n, table, None)
}

/// Central product A ∘ B: the direct product modulo the antidiagonal of the
/// two centres, which must be cyclic of equal prime order. The least
/// non-identity central element of each factor is used as the generator.
pub fn central_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    let za = least_central_generator(a)?;
    let zb = least_central_generator(b)?;
    if a.element_order(za) != b.element_order(zb) {
        return Err(GroupError::NotExtraspecial("centres have different orders"));
    }
    let prod = direct_product(a, b)?;
    let nb = b.order() as u32;
    let glued = za * nb + b.inv(zb);
    let n = Subgroup::generated(&prod, &[glued]);
    let q = quotient(&prod, &n)?;
    Ok(q.group)
}

fn least_central_generator(g: &FiniteGroup) -> Result<u32, GroupError> {
    let z = center(g);
    let gen = z.elements().iter().copied().find(|&e| e != 0);
    let gen = gen.ok_or(GroupError::NotExtraspecial("trivial centre"))?;
    if z.order() != g.element_order(gen) {
        return Err(GroupError::NotExtraspecial("centre is not cyclic"));
    }
    Ok(gen)
}

/// The modular maximal-cyclic group of order p³: ⟨x, y | x^{p²}, y^p,
/// y⁻¹xy = x^{1+p}⟩. Together with the Heisenberg group this exhausts the
/// nonabelian groups of order p³ for odd p.
pub fn modular_maximal_cyclic(p: u64) -> Result<FiniteGroup, GroupError> {
    let p = p as usize;
    let p2 = p * p;
    let n = p2 * p;
    // normal form x^i y^j with i < p², j < p; y^j x = x^{(1+p)^j} y^j
    let mut twist = vec![0usize; p];
    twist[0] = 1;
    for j in 1..p {
        twist[j] = twist[j - 1] * (1 + p) % p2;
    }
    let mut table = vec![0u32; n * n];
    let code = |i: usize, j: usize| i * p + j;
    for i1 in 0..p2 {
        for j1 in 0..p {
            for i2 in 0..p2 {
                for j2 in 0..p {
                    let i = (i1 + i2 * twist[j1]) % p2;
                    let j = (j1 + j2) % p;
                    table[code(i1, j1) * n + code(i2, j2)] = code(i, j) as u32;
                }
            }
        }
    }
    FiniteGroup::from_table(n, table, None)
}

/// The extraspecial group of order p⁵ and exponent p², built as the
/// central product of the two nonabelian groups of order p³.
pub fn extraspecial_p5_exponent_p2(p: u64) -> Result<FiniteGroup, GroupError> {
    let h = super::heisenberg(p)?;
    let m = modular_maximal_cyclic(p)?;
    central_product(&h.group, &m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouptheory::{is_extraspecial, structural_invariants};

    #[test]
    fn modular_group_27() {
        let g = modular_maximal_cyclic(3).unwrap();
        assert_eq!(g.order(), 27);
        assert_eq!(g.exponent(), 9);
        assert!(is_extraspecial(&g).unwrap());
    }

    #[test]
    fn exponent_9_extraspecial_of_order_243() {
        let g = extraspecial_p5_exponent_p2(3).unwrap();
        assert_eq!(g.order(), 243);
        assert!(is_extraspecial(&g).unwrap());
        assert_eq!(g.exponent(), 9);
        let inv = structural_invariants(&g).unwrap();
        assert_eq!(inv.nilpotency_class, Some(2));
    }

    #[test]
    fn central_product_rejects_mismatched_centres() {
        let a = cyclic(4).unwrap();
        let b = cyclic(3).unwrap();
        assert!(central_product(&a, &b).is_err());
    }
}
