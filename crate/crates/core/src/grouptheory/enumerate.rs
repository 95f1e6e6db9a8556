use std::collections::BTreeSet;

use crate::util::Bitset;

use super::table::prime_power_base;
use super::{FiniteGroup, GroupError, Subgroup};

pub const DEFAULT_SUBGROUP_LIMIT: usize = 500_000;

/// All subgroups of the given order, deduplicated, in canonical
/// (lexicographic element-set) order. Non-divisors yield an empty list.
pub fn subgroups_of_order(g: &FiniteGroup, m: usize) -> Result<Vec<Subgroup>, GroupError> {
    subgroups_of_order_bounded(g, m, DEFAULT_SUBGROUP_LIMIT)
}

pub fn subgroups_of_order_bounded(
    g: &FiniteGroup,
    m: usize,
    limit: usize,
) -> Result<Vec<Subgroup>, GroupError> {
    let n = g.order();
    if m == 0 || n % m != 0 {
        return Ok(Vec::new());
    }
    if m == 1 {
        return Ok(vec![Subgroup::trivial()]);
    }
    if m == n {
        return Ok(vec![Subgroup::whole(g)]);
    }
    if let Some(p) = prime_power_base(n) {
        if let Some(k) = exact_power(m, p) {
            return p_layered(g, p as u32, k, limit);
        }
    }
    // non-prime-power fallback: saturate the subgroup lattice
    let all = all_proper_subgroups(g, limit)?;
    let mut out: Vec<Subgroup> = all.into_iter().filter(|s| s.order() == m).collect();
    out.sort();
    Ok(out)
}

fn exact_power(mut m: usize, p: u64) -> Option<u32> {
    let p = p as usize;
    let mut k = 0;
    while m > 1 {
        if m % p != 0 {
            return None;
        }
        m /= p;
        k += 1;
    }
    Some(k)
}

/// Layered cyclic extension inside a p-group: every subgroup of order p^k
/// arises as ⟨H, x⟩ from one of its maximal subgroups H (normal of index
/// p), with x normalizing H and x^p in H.
fn p_layered(
    g: &FiniteGroup,
    p: u32,
    k: u32,
    limit: usize,
) -> Result<Vec<Subgroup>, GroupError> {
    let n = g.order();
    let mut layer: Vec<Subgroup> = vec![Subgroup::trivial()];
    for _ in 0..k {
        let mut next: BTreeSet<Vec<u32>> = BTreeSet::new();
        for h in &layer {
            let hset = h.bitset(n);
            for x in 1..n as u32 {
                if hset.get(x as usize) {
                    continue;
                }
                if !hset.get(g.pow(x, p as usize) as usize) {
                    continue;
                }
                if !normalizes(g, &hset, h.elements(), x) {
                    continue;
                }
                let ext = extend_by(g, h.elements(), x, p);
                next.insert(ext);
                if next.len() > limit {
                    return Err(GroupError::EnumerationLimit(limit));
                }
            }
        }
        layer = next
            .into_iter()
            .map(Subgroup::from_sorted_unchecked)
            .collect();
    }
    Ok(layer)
}

fn normalizes(g: &FiniteGroup, hset: &Bitset, h: &[u32], x: u32) -> bool {
    h.iter().all(|&e| hset.get(g.conjugate(e, x) as usize))
}

/// H ∪ Hx ∪ ... ∪ Hx^{p-1}, sorted.
fn extend_by(g: &FiniteGroup, h: &[u32], x: u32, p: u32) -> Vec<u32> {
    let mut out = h.to_vec();
    let mut power = x;
    for _ in 1..p {
        out.extend(h.iter().map(|&e| g.mul(e, power)));
        power = g.mul(power, x);
    }
    out.sort_unstable();
    out
}

/// Every proper subgroup, found by saturating single-element extensions of
/// cyclic subgroups. Used only off the p-group fast path.
pub(crate) fn all_proper_subgroups(
    g: &FiniteGroup,
    limit: usize,
) -> Result<Vec<Subgroup>, GroupError> {
    let n = g.order();
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut work: Vec<Subgroup> = Vec::new();
    seen.insert(vec![0]);
    work.push(Subgroup::trivial());
    for x in 1..n as u32 {
        let s = Subgroup::generated(g, &[x]);
        if s.order() < n && seen.insert(s.elements().to_vec()) {
            work.push(s);
        }
    }
    let mut head = 0;
    while head < work.len() {
        let h = work[head].clone();
        head += 1;
        for x in 1..n as u32 {
            if h.contains(x) {
                continue;
            }
            let mut gens: Vec<u32> = h.elements().to_vec();
            gens.push(x);
            let k = Subgroup::generated(g, &gens);
            if k.order() == n {
                continue;
            }
            if seen.insert(k.elements().to_vec()) {
                if seen.len() > limit {
                    return Err(GroupError::EnumerationLimit(limit));
                }
                work.push(k);
            }
        }
    }
    Ok(work)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouptheory::{cyclic, direct_product};

    #[test]
    fn c3_squared_has_four_subgroups_of_order_3() {
        let g = direct_product(&cyclic(3).unwrap(), &cyclic(3).unwrap()).unwrap();
        let subs = subgroups_of_order(&g, 3).unwrap();
        assert_eq!(subs.len(), 4);
        for s in &subs {
            assert_eq!(s.order(), 3);
        }
    }

    #[test]
    fn non_divisor_gives_empty_list() {
        let g = cyclic(9).unwrap();
        assert!(subgroups_of_order(&g, 2).unwrap().is_empty());
        assert!(subgroups_of_order(&g, 4).unwrap().is_empty());
    }

    #[test]
    fn cyclic_group_has_unique_subgroup_per_divisor() {
        let g = cyclic(27).unwrap();
        for (m, want) in [(1, 1), (3, 1), (9, 1), (27, 1)] {
            assert_eq!(subgroups_of_order(&g, m).unwrap().len(), want);
        }
    }

    #[test]
    fn generic_path_on_s3() {
        // S3 as a table: elements e, r, r², s, sr, sr²
        let g = symmetric3();
        assert_eq!(subgroups_of_order(&g, 2).unwrap().len(), 3);
        assert_eq!(subgroups_of_order(&g, 3).unwrap().len(), 1);
    }

    pub(crate) fn symmetric3() -> FiniteGroup {
        // r has order 3, s order 2, s r s = r²; indices e=0 r=1 r2=2 s=3 sr=4 sr2=5
        let names = ["e", "r", "rr", "s", "sr", "srr"];
        let mul = |a: usize, b: usize| -> usize {
            // represent as (i, j): element = s^i r^j, s r = r² s
            let (i1, j1) = (a / 3, a % 3);
            let (i2, j2) = (b / 3, b % 3);
            // (s^i1 r^j1)(s^i2 r^j2) = s^(i1+i2) r^(j1*2^i2 + j2)
            let i = (i1 + i2) % 2;
            let j = (j1 * if i2 == 1 { 2 } else { 1 } + j2) % 3;
            i * 3 + j
        };
        let mut table = vec![0u32; 36];
        for a in 0..6 {
            for b in 0..6 {
                table[a * 6 + b] = mul(a, b) as u32;
            }
        }
        FiniteGroup::from_table(6, table, Some(names.iter().map(|s| s.to_string()).collect()))
            .unwrap()
    }
}
