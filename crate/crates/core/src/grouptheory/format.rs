use super::{FiniteGroup, GroupError};

/// Serialize in the group table format: a `group <name> order <n>` header
/// followed by n rows of n element indices.
pub fn write_group_table(g: &FiniteGroup, name: &str) -> String {
    let n = g.order();
    let mut out = String::new();
    out.push_str(&format!("group {name} order {n}\n"));
    for i in 0..n as u32 {
        let row: Vec<String> = (0..n as u32).map(|j| g.mul(i, j).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parse and fully validate a group table file; the table must be a Latin
/// square with identity 0 and an associative operation.
pub fn parse_group_table(text: &str) -> Result<(String, FiniteGroup), GroupError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| GroupError::Parse("empty file".into()))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let (name, n) = match tokens.as_slice() {
        ["group", name, "order", n] => {
            let n: usize = n
                .parse()
                .map_err(|_| GroupError::Parse(format!("bad order {n:?}")))?;
            (name.to_string(), n)
        }
        _ => {
            return Err(GroupError::Parse(format!(
                "expected `group <name> order <n>`, got {header:?}"
            )))
        }
    };
    let mut table = Vec::with_capacity(n * n);
    for (i, line) in lines.enumerate() {
        if i >= n {
            return Err(GroupError::Parse("too many rows".into()));
        }
        for tok in line.split_whitespace() {
            let v: u32 = tok
                .parse()
                .map_err(|_| GroupError::Parse(format!("bad entry {tok:?} in row {i}")))?;
            table.push(v);
        }
        if table.len() != (i + 1) * n {
            return Err(GroupError::Parse(format!("row {i} has wrong length")));
        }
    }
    if table.len() != n * n {
        return Err(GroupError::Parse("missing rows".into()));
    }
    let g = FiniteGroup::from_table(n, table, None)?;
    Ok((name, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouptheory::cyclic;

    #[test]
    fn round_trip() {
        let g = cyclic(6).unwrap();
        let text = write_group_table(&g, "c6");
        let (name, h) = parse_group_table(&text).unwrap();
        assert_eq!(name, "c6");
        assert_eq!(g.order(), h.order());
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(g.mul(i, j), h.mul(i, j));
            }
        }
        assert_eq!(write_group_table(&h, "c6"), text);
    }

    #[test]
    fn tampered_row_is_a_latin_violation() {
        let g = cyclic(4).unwrap();
        let mut text = write_group_table(&g, "c4");
        // duplicate an entry in the last row
        text = text.replace("3 0 1 2", "3 0 1 1");
        assert!(matches!(
            parse_group_table(&text),
            Err(GroupError::NotLatin { .. })
        ));
    }

    #[test]
    fn malformed_header_rejected() {
        assert!(matches!(
            parse_group_table("grp x order 3\n"),
            Err(GroupError::Parse(_))
        ));
    }
}
