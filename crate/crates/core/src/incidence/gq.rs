use std::fmt;

use crate::util::Bitset;

use super::IncidenceStructure;

/// Parameters of a generalised quadrangle: lines carry s+1 points, points
/// carry t+1 lines. Construction checks Higman's inequality t ≤ s²,
/// s ≤ t².
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GqOrder {
    pub s: usize,
    pub t: usize,
}

impl fmt::Display for GqOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.s, self.t)
    }
}

/// Why a structure fails the quadrangle axioms, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GqViolation {
    PointDegree { point: u32, got: usize, want: usize },
    LineDegree { line: u32, got: usize, want: usize },
    TwoPointsTwoLines { p: u32, q: u32 },
    TwoLinesTwoPoints { l: u32, m: u32 },
    /// For non-incident (point, line) the number of collinear points on
    /// the line differs from one.
    UniqueCollinear { point: u32, line: u32, found: Vec<u32> },
    Degenerate { s: usize, t: usize },
    HigmanBound { s: usize, t: usize },
    CountIdentity { points: usize, lines: usize, s: usize, t: usize },
}

impl fmt::Display for GqViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GqViolation::PointDegree { point, got, want } => {
                write!(f, "point {point} lies on {got} lines, expected {want}")
            }
            GqViolation::LineDegree { line, got, want } => {
                write!(f, "line {line} carries {got} points, expected {want}")
            }
            GqViolation::TwoPointsTwoLines { p, q } => {
                write!(f, "points {p} and {q} lie on two common lines")
            }
            GqViolation::TwoLinesTwoPoints { l, m } => {
                write!(f, "lines {l} and {m} share two points")
            }
            GqViolation::UniqueCollinear { point, line, found } => write!(
                f,
                "point {point} off line {line} sees {} collinear points {found:?}, expected 1",
                found.len()
            ),
            GqViolation::Degenerate { s, t } => {
                write!(f, "degenerate parameters (s,t) = ({s},{t})")
            }
            GqViolation::HigmanBound { s, t } => {
                write!(f, "parameters ({s},{t}) break Higman's inequality")
            }
            GqViolation::CountIdentity { points, lines, s, t } => write!(
                f,
                "({points},{lines}) elements but order ({s},{t}) demands \
                 ({},{})",
                (1 + s) * (1 + s * t),
                (1 + t) * (1 + s * t)
            ),
        }
    }
}

/// Check the three quadrangle axioms and return the order, or the first
/// violation with witnesses. Violations are results, not errors.
pub fn verify_gq(s: &IncidenceStructure) -> Result<GqOrder, GqViolation> {
    let np = s.num_points();
    let nl = s.num_lines();

    let t_plus_1 = s.lines_of_point(0).len();
    for p in 0..np as u32 {
        let got = s.lines_of_point(p).len();
        if got != t_plus_1 {
            return Err(GqViolation::PointDegree {
                point: p,
                got,
                want: t_plus_1,
            });
        }
    }
    let s_plus_1 = s.points_of_line(0).len();
    for l in 0..nl as u32 {
        let got = s.points_of_line(l).len();
        if got != s_plus_1 {
            return Err(GqViolation::LineDegree {
                line: l,
                got,
                want: s_plus_1,
            });
        }
    }
    // collinearity bit matrix; a doubly marked pair witnesses two common lines
    let mut collinear = Bitset::new(np * np);
    for l in 0..nl as u32 {
        let pts = s.points_of_line(l);
        for (i, &a) in pts.iter().enumerate() {
            for &b in &pts[i + 1..] {
                if collinear.get(a as usize * np + b as usize) {
                    return Err(GqViolation::TwoPointsTwoLines { p: a, q: b });
                }
                collinear.set(a as usize * np + b as usize);
                collinear.set(b as usize * np + a as usize);
            }
        }
    }
    let mut concurrent = Bitset::new(nl * nl);
    for p in 0..np as u32 {
        let lines = s.lines_of_point(p);
        for (i, &l) in lines.iter().enumerate() {
            for &m in &lines[i + 1..] {
                if concurrent.get(l as usize * nl + m as usize) {
                    return Err(GqViolation::TwoLinesTwoPoints { l, m });
                }
                concurrent.set(l as usize * nl + m as usize);
                concurrent.set(m as usize * nl + l as usize);
            }
        }
    }
    for p in 0..np as u32 {
        for l in 0..nl as u32 {
            if s.incident(p, l) {
                continue;
            }
            let found: Vec<u32> = s
                .points_of_line(l)
                .iter()
                .copied()
                .filter(|&x| collinear.get(p as usize * np + x as usize))
                .collect();
            if found.len() != 1 {
                return Err(GqViolation::UniqueCollinear { point: p, line: l, found });
            }
        }
    }

    let (ss, tt) = (s_plus_1 - 1, t_plus_1 - 1);
    if ss < 1 || tt < 1 {
        return Err(GqViolation::Degenerate { s: ss, t: tt });
    }
    if tt > ss * ss || ss > tt * tt {
        return Err(GqViolation::HigmanBound { s: ss, t: tt });
    }
    if np != (1 + ss) * (1 + ss * tt) || nl != (1 + tt) * (1 + ss * tt) {
        return Err(GqViolation::CountIdentity {
            points: np,
            lines: nl,
            s: ss,
            t: tt,
        });
    }
    Ok(GqOrder { s: ss, t: tt })
}

#[cfg(test)]
mod tests {
    use super::super::structure::grid;
    use super::*;

    #[test]
    fn grid_is_a_gq_of_order_2_1() {
        let g = grid(3, 3);
        assert_eq!(verify_gq(&g), Ok(GqOrder { s: 2, t: 1 }));
        assert_eq!(verify_gq(&g.dual()), Ok(GqOrder { s: 1, t: 2 }));
    }

    #[test]
    fn two_lines_through_two_points_flagged() {
        let labels = |n: usize, pre: &str| -> Vec<String> {
            (0..n).map(|i| format!("{pre}{i}")).collect()
        };
        // two lines both containing points 0 and 1
        let s = IncidenceStructure::new(
            labels(2, "p"),
            labels(2, "l"),
            vec![(0, 0), (1, 0), (0, 1), (1, 1)],
        )
        .unwrap();
        let v = verify_gq(&s).unwrap_err();
        assert!(
            matches!(
                v,
                GqViolation::TwoPointsTwoLines { p: 0, q: 1 }
                    | GqViolation::TwoLinesTwoPoints { l: 0, m: 1 }
            ),
            "got {v}"
        );
    }

    #[test]
    fn uneven_degrees_flagged() {
        let labels = |n: usize, pre: &str| -> Vec<String> {
            (0..n).map(|i| format!("{pre}{i}")).collect()
        };
        let s = IncidenceStructure::new(
            labels(3, "p"),
            labels(2, "l"),
            vec![(0, 0), (1, 0), (2, 1), (0, 1)],
        )
        .unwrap();
        assert!(matches!(
            verify_gq(&s).unwrap_err(),
            GqViolation::PointDegree { .. } | GqViolation::LineDegree { .. }
        ));
    }
}
