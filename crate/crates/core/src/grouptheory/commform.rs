use crate::algebra::{Field, FieldElement, Matrix};
use crate::projgeom::{Form, ProjSubspace};

use super::invariants::{center, is_extraspecial};
use super::{quotient, FiniteGroup, GroupError, QuotientGroup, Subgroup};

/// The symplectic geometry an extraspecial group E carries on V = E/Z(E):
/// fixing a generator z of the centre, ⟨Zx, Zy⟩ is the discrete log of the
/// commutator [x,y]. Coordinates of every coset in a fixed basis are
/// precomputed, so subgroups map to subspaces by table lookup.
#[derive(Debug, Clone)]
pub struct CommutatorForm {
    field: Field,
    /// chosen generator of Z(E)
    z: u32,
    quotient: QuotientGroup,
    /// coset indices whose images form the fixed basis of V
    basis: Vec<u32>,
    /// coset index -> coordinate vector over GF(p)
    coords: Vec<Vec<FieldElement>>,
    form: Form,
}

impl CommutatorForm {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn prime(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    pub fn quotient(&self) -> &QuotientGroup {
        &self.quotient
    }

    pub fn centre_generator(&self) -> u32 {
        self.z
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of the coset of g in V.
    pub fn vector_of(&self, g: u32) -> &[FieldElement] {
        &self.coords[self.quotient.project(g) as usize]
    }

    /// Image of a subgroup containing Z(E) as a projective subspace of
    /// PG(dim-1, p).
    pub fn subgroup_image(&self, sub: &Subgroup) -> ProjSubspace {
        let field = self.field;
        let ambient = self.dim() - 1;
        let mut image = ProjSubspace::empty(ambient, field);
        for &e in sub.elements() {
            let v = self.vector_of(e);
            if v.iter().all(|c| c.is_zero()) {
                continue;
            }
            let p = ProjSubspace::point(v);
            if !image.contains(&p) {
                image = crate::projgeom::span(&image, &p).expect("same ambient");
            }
        }
        image
    }

    /// Full preimage in E of a projective subspace of V (always contains Z).
    pub fn subspace_preimage(&self, g: &FiniteGroup, sub: &ProjSubspace) -> Subgroup {
        let mut els = Vec::new();
        for e in 0..g.order() as u32 {
            let v = self.vector_of(e);
            if v.iter().all(|c| c.is_zero()) {
                els.push(e);
            } else if sub.contains(&ProjSubspace::point(v)) {
                els.push(e);
            }
        }
        Subgroup::from_elements(g, els).expect("preimage of a subspace is a subgroup")
    }
}

/// Build the commutator form of an extraspecial group. The generator of
/// Z(E) is the least non-identity central element; the basis of V is
/// chosen greedily by coset index, so the whole construction is
/// deterministic.
pub fn commutator_form(g: &FiniteGroup) -> Result<CommutatorForm, GroupError> {
    if !is_extraspecial(g)? {
        return Err(GroupError::NotExtraspecial(
            "commutator form needs Z = G' = Φ of order p",
        ));
    }
    let p = g.p_group_prime().expect("checked above");
    let field = Field::prime(p)?;
    let z_sub = center(g);
    let z = z_sub.elements()[1];

    // discrete log table in Z = ⟨z⟩
    let mut dlog = vec![u32::MAX; g.order()];
    let mut acc = 0u32;
    for k in 0..p as u32 {
        dlog[acc as usize] = k;
        acc = g.mul(acc, z);
    }

    let q = quotient(g, &z_sub)?;
    let v_order = q.group.order();

    // greedy basis of the elementary abelian quotient
    let mut basis: Vec<u32> = Vec::new();
    let mut spanned = vec![false; v_order];
    spanned[0] = true;
    let mut span_els: Vec<u32> = vec![0];
    for cand in 1..v_order as u32 {
        if spanned[cand as usize] {
            continue;
        }
        basis.push(cand);
        let mut new_span = Vec::new();
        for &s in &span_els {
            let mut x = s;
            for _ in 0..p {
                if !spanned[x as usize] {
                    spanned[x as usize] = true;
                    new_span.push(x);
                }
                x = q.group.mul(x, cand);
            }
        }
        span_els.extend(new_span);
        if span_els.len() == v_order {
            break;
        }
    }
    let dim = basis.len();

    // coordinates of every coset: enumerate all linear combinations
    let mut coords: Vec<Vec<FieldElement>> = vec![Vec::new(); v_order];
    let total = (p as usize).pow(dim as u32);
    for code in 0..total {
        let mut rest = code;
        let mut vec = Vec::with_capacity(dim);
        let mut el = 0u32;
        for &b in &basis {
            let e = rest % p as usize;
            rest /= p as usize;
            vec.push(field.from_int(e as i64));
            for _ in 0..e {
                el = q.group.mul(el, b);
            }
        }
        coords[el as usize] = vec;
    }
    debug_assert!(coords.iter().all(|c| !c.is_empty()), "coordinates cover V");

    let mut gram = Matrix::zeros(dim, dim, field);
    for (i, &bi) in basis.iter().enumerate() {
        for (j, &bj) in basis.iter().enumerate() {
            let c = g.commutator(q.lift(bi), q.lift(bj));
            let k = dlog[c as usize];
            debug_assert_ne!(k, u32::MAX, "commutators land in the centre");
            gram.set(i, j, field.from_int(k as i64));
        }
    }
    let form = Form::symplectic(gram)
        .map_err(|_| GroupError::NotExtraspecial("commutator form is not symplectic"))?;

    Ok(CommutatorForm {
        field,
        z,
        quotient: q,
        basis,
        coords,
        form,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouptheory::{extraspecial_p5, subgroups_of_order};
    use crate::projgeom::isotropic_subspaces;
    use std::collections::BTreeSet;

    #[test]
    fn quotient_is_elementary_abelian_of_order_81() {
        let mg = extraspecial_p5(3).unwrap();
        let cf = commutator_form(&mg.group).unwrap();
        assert_eq!(cf.quotient().group.order(), 81);
        assert_eq!(cf.quotient().group.exponent(), 3);
        assert_eq!(cf.dim(), 4);
    }

    #[test]
    fn form_is_nondegenerate_alternating() {
        let mg = extraspecial_p5(3).unwrap();
        let cf = commutator_form(&mg.group).unwrap();
        let gram = cf.form().gram();
        assert_eq!(gram.rank(), 4);
        for i in 0..4 {
            assert!(gram.get(i, i).is_zero());
        }
        // <v,v> = 0 for every vector of V
        let g = &mg.group;
        for e in 0..g.order() as u32 {
            let v = cf.vector_of(e);
            assert!(cf.form().eval(v, v).is_zero());
        }
    }

    #[test]
    fn abelian_order_27_subgroups_containing_z_match_ti_lines() {
        let mg = extraspecial_p5(3).unwrap();
        let g = &mg.group;
        let cf = commutator_form(g).unwrap();
        let z_sub = center(g);

        let subs = subgroups_of_order(g, 27).unwrap();
        assert_eq!(subs.len(), 130);
        let abelian_with_z: Vec<_> = subs
            .iter()
            .filter(|s| s.is_abelian(g) && z_sub.is_subset_of(s))
            .collect();
        assert_eq!(abelian_with_z.len(), 40);

        let ti_lines: BTreeSet<ProjSubspace> =
            isotropic_subspaces(cf.form(), 1).into_iter().collect();
        assert_eq!(ti_lines.len(), 40);

        // forward: images of the abelian subgroups are exactly the t.i. lines
        let images: BTreeSet<ProjSubspace> = abelian_with_z
            .iter()
            .map(|s| cf.subgroup_image(s))
            .collect();
        assert_eq!(images, ti_lines);

        // backward: preimages of t.i. lines are abelian of order 27
        for line in &ti_lines {
            let pre = cf.subspace_preimage(g, line);
            assert_eq!(pre.order(), 27);
            assert!(pre.is_abelian(g));
        }
    }

    #[test]
    fn non_extraspecial_input_rejected() {
        let g = crate::grouptheory::cyclic(27).unwrap();
        assert!(matches!(
            commutator_form(&g),
            Err(GroupError::NotExtraspecial(_))
        ));
    }
}
