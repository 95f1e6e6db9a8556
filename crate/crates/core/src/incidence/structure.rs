use super::IncidenceError;

/// A bipartite point-line geometry. Incidence pairs are kept sorted and
/// deduplicated; adjacency lists are cached both ways. Isolated points or
/// lines are rejected, so every structure is a genuine geometry.
///
/// Two structures compare equal iff their labels and sorted incidence
/// pairs agree, which matches byte-equality of the canonical text export.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceStructure {
    point_labels: Vec<String>,
    line_labels: Vec<String>,
    pairs: Vec<(u32, u32)>,
    point_lines: Vec<Vec<u32>>,
    line_points: Vec<Vec<u32>>,
}

impl IncidenceStructure {
    pub fn new(
        point_labels: Vec<String>,
        line_labels: Vec<String>,
        mut pairs: Vec<(u32, u32)>,
    ) -> Result<IncidenceStructure, IncidenceError> {
        let np = point_labels.len();
        let nl = line_labels.len();
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            if w[0] == w[1] {
                return Err(IncidenceError::DuplicatePair(w[0].0, w[0].1));
            }
        }
        let mut point_lines = vec![Vec::new(); np];
        let mut line_points = vec![Vec::new(); nl];
        for &(p, l) in &pairs {
            if p as usize >= np || l as usize >= nl {
                return Err(IncidenceError::PairRange(p, l));
            }
            point_lines[p as usize].push(l);
            line_points[l as usize].push(p);
        }
        if let Some(p) = point_lines.iter().position(|v| v.is_empty()) {
            return Err(IncidenceError::IsolatedPoint(p as u32));
        }
        if let Some(l) = line_points.iter().position(|v| v.is_empty()) {
            return Err(IncidenceError::IsolatedLine(l as u32));
        }
        Ok(IncidenceStructure {
            point_labels,
            line_labels,
            pairs,
            point_lines,
            line_points,
        })
    }

    pub fn num_points(&self) -> usize {
        self.point_labels.len()
    }

    pub fn num_lines(&self) -> usize {
        self.line_labels.len()
    }

    pub fn counts(&self) -> (usize, usize) {
        (self.num_points(), self.num_lines())
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn lines_of_point(&self, p: u32) -> &[u32] {
        &self.point_lines[p as usize]
    }

    pub fn points_of_line(&self, l: u32) -> &[u32] {
        &self.line_points[l as usize]
    }

    pub fn incident(&self, p: u32, l: u32) -> bool {
        self.pairs.binary_search(&(p, l)).is_ok()
    }

    pub fn point_label(&self, p: u32) -> &str {
        &self.point_labels[p as usize]
    }

    pub fn line_label(&self, l: u32) -> &str {
        &self.line_labels[l as usize]
    }

    pub fn point_index_of(&self, label: &str) -> Option<u32> {
        self.point_labels
            .iter()
            .position(|s| s == label)
            .map(|i| i as u32)
    }

    pub fn line_index_of(&self, label: &str) -> Option<u32> {
        self.line_labels
            .iter()
            .position(|s| s == label)
            .map(|i| i as u32)
    }

    /// Number of lines through both points.
    pub fn common_lines(&self, p: u32, q: u32) -> usize {
        let (a, b) = (
            &self.point_lines[p as usize],
            &self.point_lines[q as usize],
        );
        sorted_intersection_size(a, b)
    }

    /// Number of points on both lines.
    pub fn common_points(&self, l: u32, m: u32) -> usize {
        let (a, b) = (
            &self.line_points[l as usize],
            &self.line_points[m as usize],
        );
        sorted_intersection_size(a, b)
    }

    pub fn collinear(&self, p: u32, q: u32) -> bool {
        p != q && self.common_lines(p, q) > 0
    }

    /// The point-line dual: points become lines and vice versa.
    pub fn dual(&self) -> IncidenceStructure {
        let pairs = self.pairs.iter().map(|&(p, l)| (l, p)).collect();
        IncidenceStructure::new(self.line_labels.clone(), self.point_labels.clone(), pairs)
            .expect("dual of a valid structure is valid")
    }

    /// Canonical text export; two structures are equal iff their exports
    /// are byte-identical.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("points {}\n", self.num_points()));
        out.push_str(&format!("lines {}\n", self.num_lines()));
        for &(p, l) in &self.pairs {
            out.push_str(&format!("inc {p} {l}\n"));
        }
        for (i, label) in self.point_labels.iter().enumerate() {
            out.push_str(&format!("plabel {i} {label}\n"));
        }
        for (i, label) in self.line_labels.iter().enumerate() {
            out.push_str(&format!("llabel {i} {label}\n"));
        }
        out
    }

    /// Parse the text format; the label section is optional and missing
    /// labels default to `p<i>` / `l<i>`.
    pub fn from_text(text: &str) -> Result<IncidenceStructure, IncidenceError> {
        let mut np: Option<usize> = None;
        let mut nl: Option<usize> = None;
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        let mut plabels: Vec<(usize, String)> = Vec::new();
        let mut llabels: Vec<(usize, String)> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (head, rest) = line.split_once(' ').unwrap_or((line, ""));
            match head {
                "points" => np = Some(parse_num(rest)?),
                "lines" => nl = Some(parse_num(rest)?),
                "inc" => {
                    let mut it = rest.split_whitespace();
                    let p = parse_num(it.next().unwrap_or(""))? as u32;
                    let l = parse_num(it.next().unwrap_or(""))? as u32;
                    pairs.push((p, l));
                }
                "plabel" | "llabel" => {
                    let (idx, label) = rest
                        .split_once(' ')
                        .ok_or_else(|| IncidenceError::Parse(format!("bad label line {line:?}")))?;
                    let idx = parse_num(idx)?;
                    if head == "plabel" {
                        plabels.push((idx, label.to_string()));
                    } else {
                        llabels.push((idx, label.to_string()));
                    }
                }
                _ => return Err(IncidenceError::Parse(format!("unknown directive {head:?}"))),
            }
        }
        let np = np.ok_or_else(|| IncidenceError::Parse("missing points header".into()))?;
        let nl = nl.ok_or_else(|| IncidenceError::Parse("missing lines header".into()))?;
        let mut point_labels: Vec<String> = (0..np).map(|i| format!("p{i}")).collect();
        let mut line_labels: Vec<String> = (0..nl).map(|i| format!("l{i}")).collect();
        for (i, s) in plabels {
            if i >= np {
                return Err(IncidenceError::Parse(format!("plabel index {i} out of range")));
            }
            point_labels[i] = s;
        }
        for (i, s) in llabels {
            if i >= nl {
                return Err(IncidenceError::Parse(format!("llabel index {i} out of range")));
            }
            line_labels[i] = s;
        }
        IncidenceStructure::new(point_labels, line_labels, pairs)
    }
}

fn parse_num(s: &str) -> Result<usize, IncidenceError> {
    s.trim()
        .parse()
        .map_err(|_| IncidenceError::Parse(format!("bad number {s:?}")))
}

fn sorted_intersection_size(a: &[u32], b: &[u32]) -> usize {
    let mut count = 0;
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
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

/// The s+1 by t+1 grid geometry: points are cells, lines are the rows and
/// columns. A generalised quadrangle of order (s, 1).
pub fn grid(rows: usize, cols: usize) -> IncidenceStructure {
    let point_labels = (0..rows * cols)
        .map(|i| format!("c{}_{}", i / cols, i % cols))
        .collect();
    let mut line_labels: Vec<String> = (0..rows).map(|r| format!("row{r}")).collect();
    line_labels.extend((0..cols).map(|c| format!("col{c}")));
    let mut pairs = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let p = (r * cols + c) as u32;
            pairs.push((p, r as u32));
            pairs.push((p, (rows + c) as u32));
        }
    }
    IncidenceStructure::new(point_labels, line_labels, pairs).expect("grid is valid")
}
