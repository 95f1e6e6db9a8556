use std::collections::BTreeSet;

use crate::algebra::Field;

use super::subspace::{enumerate_points, enumerate_subspaces, span, ProjSubspace};
use super::ProjGeomError;

/// Quadratic cone of PG(3,q): a vertex joined to a base conic in a plane
/// off the vertex. Cone points are enumerated along the generator lines,
/// so no general quadric machinery is involved.
#[derive(Debug, Clone)]
pub struct QuadCone {
    vertex: ProjSubspace,
    base_plane: ProjSubspace,
    base_conic: Vec<ProjSubspace>,
}

impl QuadCone {
    pub fn new(
        vertex: ProjSubspace,
        base_plane: ProjSubspace,
        base_conic: Vec<ProjSubspace>,
    ) -> Result<QuadCone, ProjGeomError> {
        if base_plane.contains(&vertex) {
            return Err(ProjGeomError::MalformedCone);
        }
        for c in &base_conic {
            if c.pdim() != 0 || !base_plane.contains(c) {
                return Err(ProjGeomError::MalformedCone);
            }
        }
        Ok(QuadCone {
            vertex,
            base_plane,
            base_conic,
        })
    }

    /// The cone over the conic x₁² = x₀x₂ in the plane x₃ = 0, with
    /// vertex (0,0,0,1).
    pub fn canonical(field: Field) -> QuadCone {
        let q = field.order();
        let vertex = ProjSubspace::point_from_ints(field, &[0, 0, 0, 1]);
        let e0 = ProjSubspace::point_from_ints(field, &[1, 0, 0, 0]);
        let e1 = ProjSubspace::point_from_ints(field, &[0, 1, 0, 0]);
        let e2 = ProjSubspace::point_from_ints(field, &[0, 0, 1, 0]);
        let base_plane = span(&span(&e0, &e1).unwrap(), &e2).unwrap();
        let mut base_conic = Vec::with_capacity(q as usize + 1);
        for t in 0..q {
            let t = field.from_index(t);
            base_conic.push(ProjSubspace::point(&[
                field.one(),
                t,
                t * t,
                field.zero(),
            ]));
        }
        base_conic.push(e2);
        QuadCone::new(vertex, base_plane, base_conic).expect("canonical cone is well formed")
    }

    pub fn vertex(&self) -> &ProjSubspace {
        &self.vertex
    }

    pub fn base_plane(&self) -> &ProjSubspace {
        &self.base_plane
    }

    pub fn base_conic(&self) -> &[ProjSubspace] {
        &self.base_conic
    }

    pub fn field(&self) -> Field {
        self.vertex.field()
    }

    /// All q(q+1) cone points except the vertex, canonical order.
    pub fn points_minus_vertex(&self) -> Vec<ProjSubspace> {
        let mut out = BTreeSet::new();
        for c in &self.base_conic {
            let generator = span(&self.vertex, c).expect("same ambient");
            for p in generator.points() {
                if p != self.vertex {
                    out.insert(p);
                }
            }
        }
        out.into_iter().collect()
    }
}

/// A candidate flock: q point classes intended to partition the cone minus
/// its vertex into plane-section conics.
#[derive(Debug, Clone)]
pub struct Flock {
    pub cone: QuadCone,
    pub classes: Vec<Vec<ProjSubspace>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlockViolation {
    /// A point lies in two classes.
    NotDisjoint {
        class_a: usize,
        class_b: usize,
        point: String,
    },
    /// The classes miss part of the cone (or contain stray points).
    NotCovering { missing: usize, extra: usize },
    /// A class is not a plane section of the cone avoiding the vertex.
    NotAConic { class: usize, reason: String },
    WrongClassCount { got: usize, want: usize },
}

impl std::fmt::Display for FlockViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FlockViolation::NotDisjoint {
                class_a,
                class_b,
                point,
            } => write!(f, "classes {class_a} and {class_b} share point {point}"),
            FlockViolation::NotCovering { missing, extra } => {
                write!(f, "cover mismatch: {missing} cone points missing, {extra} extra")
            }
            FlockViolation::NotAConic { class, reason } => {
                write!(f, "class {class} is not a conic section: {reason}")
            }
            FlockViolation::WrongClassCount { got, want } => {
                write!(f, "expected {want} classes, got {got}")
            }
        }
    }
}

/// Check the three flock invariants: pairwise disjoint classes, each a
/// plane section of the cone that is a nondegenerate conic, union equal
/// to the cone minus its vertex. Reports the first violation found.
pub fn verify_flock(fl: &Flock) -> Result<(), FlockViolation> {
    let q = fl.cone.field().order() as usize;
    if fl.classes.len() != q {
        return Err(FlockViolation::WrongClassCount {
            got: fl.classes.len(),
            want: q,
        });
    }
    let cone_points: BTreeSet<ProjSubspace> = fl.cone.points_minus_vertex().into_iter().collect();

    for a in 0..fl.classes.len() {
        for b in a + 1..fl.classes.len() {
            let set_a: BTreeSet<&ProjSubspace> = fl.classes[a].iter().collect();
            if let Some(shared) = fl.classes[b].iter().find(|p| set_a.contains(p)) {
                return Err(FlockViolation::NotDisjoint {
                    class_a: a,
                    class_b: b,
                    point: shared.to_string(),
                });
            }
        }
    }

    let covered: BTreeSet<&ProjSubspace> = fl.classes.iter().flatten().collect();
    let missing = cone_points.iter().filter(|p| !covered.contains(p)).count();
    let extra = covered.iter().filter(|p| !cone_points.contains(**p)).count();
    if missing > 0 || extra > 0 {
        return Err(FlockViolation::NotCovering { missing, extra });
    }

    for (i, class) in fl.classes.iter().enumerate() {
        // plane section: the span is a plane off the vertex and the class
        // is exactly the cone part of that plane
        let mut plane = ProjSubspace::empty(3, fl.cone.field());
        for p in class {
            plane = span(&plane, p).expect("same ambient");
        }
        if plane.pdim() != 2 {
            return Err(FlockViolation::NotAConic {
                class: i,
                reason: format!("span has projective dimension {}", plane.pdim()),
            });
        }
        if plane.contains(fl.cone.vertex()) {
            return Err(FlockViolation::NotAConic {
                class: i,
                reason: "span passes through the vertex".into(),
            });
        }
        let section: BTreeSet<&ProjSubspace> =
            cone_points.iter().filter(|p| plane.contains(p)).collect();
        let class_set: BTreeSet<&ProjSubspace> = class.iter().collect();
        if class_set != section {
            return Err(FlockViolation::NotAConic {
                class: i,
                reason: "class differs from its plane section".into(),
            });
        }
        if class.len() != q + 1 {
            return Err(FlockViolation::NotAConic {
                class: i,
                reason: format!("size {} instead of {}", class.len(), q + 1),
            });
        }
    }

    Ok(())
}

/// The linear flock of the canonical cone: sections by the planes through
/// the lexicographically least line exterior to the cone. Deterministic,
/// mainly a test fixture.
pub fn linear_flock(field: Field) -> Flock {
    let cone = QuadCone::canonical(field);
    let mut on_cone: BTreeSet<ProjSubspace> = cone.points_minus_vertex().into_iter().collect();
    on_cone.insert(cone.vertex().clone());

    let exterior = enumerate_subspaces(3, field, 1)
        .into_iter()
        .find(|l| l.points().iter().all(|p| !on_cone.contains(p)))
        .expect("an exterior line exists for odd q");

    let mut planes = BTreeSet::new();
    for p in enumerate_points(3, field) {
        if !exterior.contains(&p) {
            planes.insert(span(&exterior, &p).expect("same ambient"));
        }
    }
    let classes: Vec<Vec<ProjSubspace>> = planes
        .into_iter()
        .filter(|pl| !pl.contains(cone.vertex()))
        .map(|pl| {
            cone.points_minus_vertex()
                .into_iter()
                .filter(|p| pl.contains(p))
                .collect()
        })
        .collect();
    Flock { cone, classes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;

    #[test]
    fn cone_point_counts() {
        for q in [3u64, 5] {
            let f = Field::prime(q).unwrap();
            let cone = QuadCone::canonical(f);
            assert_eq!(cone.base_conic().len() as u64, q + 1);
            assert_eq!(cone.points_minus_vertex().len() as u64, q * (q + 1));
        }
    }

    #[test]
    fn vertex_on_base_plane_rejected() {
        let f = Field::prime(3).unwrap();
        let cone = QuadCone::canonical(f);
        let bad = QuadCone::new(
            cone.base_conic()[0].clone(),
            cone.base_plane().clone(),
            cone.base_conic().to_vec(),
        );
        assert_eq!(bad.unwrap_err(), ProjGeomError::MalformedCone);
    }

    #[test]
    fn linear_flock_is_valid() {
        for q in [3u64, 5] {
            let f = Field::prime(q).unwrap();
            let fl = linear_flock(f);
            assert_eq!(fl.classes.len() as u64, q);
            for class in &fl.classes {
                assert_eq!(class.len() as u64, q + 1);
            }
            assert_eq!(verify_flock(&fl), Ok(()));
        }
    }

    #[test]
    fn shared_point_breaks_disjointness() {
        let f = Field::prime(3).unwrap();
        let mut fl = linear_flock(f);
        let stolen = fl.classes[0][0].clone();
        fl.classes[1][0] = stolen;
        let v = verify_flock(&fl).unwrap_err();
        assert!(matches!(v, FlockViolation::NotDisjoint { class_a: 0, class_b: 1, .. }), "got {v}");
    }

    #[test]
    fn stray_point_breaks_cover() {
        let f = Field::prime(3).unwrap();
        let mut fl = linear_flock(f);
        // swap a cone point for a point off the cone
        fl.classes[0][0] = ProjSubspace::point_from_ints(f, &[0, 1, 0, 0]);
        assert_eq!(
            verify_flock(&fl).unwrap_err(),
            FlockViolation::NotCovering { missing: 1, extra: 1 }
        );
    }

    #[test]
    fn partial_cover_detected() {
        let f = Field::prime(3).unwrap();
        let mut fl = linear_flock(f);
        fl.classes.pop();
        assert_eq!(
            verify_flock(&fl).unwrap_err(),
            FlockViolation::WrongClassCount { got: 2, want: 3 }
        );
        // repeating a class keeps the count right but shares points
        let mut fl3 = linear_flock(f);
        fl3.classes[2] = fl3.classes[1].clone();
        let v = verify_flock(&fl3).unwrap_err();
        assert!(matches!(v, FlockViolation::NotDisjoint { .. }));
    }
}
