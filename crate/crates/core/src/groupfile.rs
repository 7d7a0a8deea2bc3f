//! Line-oriented text format for matrix groups over ℚ(ζ_N).
//!
//! ```text
//! # comment
//! cyclotomic_order: 12
//! dim: 2
//! variables: x, y          (optional, default x1..xn)
//! convention: direct       (optional)
//! generator g
//! z^4, 0
//! 0, z^8
//! ```
//!
//! Matrix entries use the scalar grammar of [`crate::poly::parse_scalar`]:
//! rationals, `z`, `+ - * / ^` and parentheses.

use std::path::Path;
use std::sync::Arc;

use crate::arith::{CycField, CycNum};
use crate::error::{Error, Result};
use crate::linalg::FieldMatrix;
use crate::matgroup::ActionConvention;
use crate::poly::{parse_scalar_at, PolyRing};

#[derive(Clone, Debug, PartialEq)]
pub struct GroupFile {
    pub cyclotomic_order: u32,
    pub dim: usize,
    pub variables: Vec<String>,
    pub convention: Option<ActionConvention>,
    pub generators: Vec<(String, FieldMatrix)>,
}

impl GroupFile {
    pub fn field(&self) -> &'static CycField {
        CycField::get(self.cyclotomic_order)
    }

    pub fn ring(&self) -> Arc<PolyRing> {
        PolyRing::new(&self.variables, self.field())
    }

    pub fn matrices(&self) -> Vec<FieldMatrix> {
        self.generators.iter().map(|(_, m)| m.clone()).collect()
    }

    /// Canonical text; parses back to an equal value.
    pub fn to_text(&self) -> String {
        let mut s = format!("cyclotomic_order: {}\ndim: {}\nvariables: {}\n", self.cyclotomic_order, self.dim, self.variables.join(", "));
        if let Some(c) = self.convention {
            s.push_str(&format!("convention: {}\n", c.name()));
        }
        for (name, m) in &self.generators {
            s.push_str(&format!("generator {name}\n"));
            for i in 0..m.rows() {
                let row: Vec<String> = m.row(i).iter().map(|x| x.to_string()).collect();
                s.push_str(&row.join(", "));
                s.push('\n');
            }
        }
        s
    }
}

fn perr<T>(line: usize, col: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, col, msg: msg.into() })
}

pub fn parse_group_file(text: &str) -> Result<GroupFile> {
    let mut order: Option<u32> = None;
    let mut dim: Option<usize> = None;
    let mut variables: Option<Vec<String>> = None;
    let mut convention = None;
    let mut generators: Vec<(String, FieldMatrix)> = Vec::new();
    let mut pending: Option<(String, usize, Vec<Vec<CycNum>>)> = None;

    let finish = |p: Option<(String, usize, Vec<Vec<CycNum>>)>, dim: usize, out: &mut Vec<(String, FieldMatrix)>| -> Result<()> {
        if let Some((name, line, rows)) = p {
            if rows.len() != dim {
                return perr(line, 1, format!("generator {name} has {} rows, expected {dim}", rows.len()));
            }
            out.push((name, FieldMatrix::from_rows(rows)?));
        }
        Ok(())
    };

    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("generator") {
            if !rest.is_empty() && !rest.starts_with(char::is_whitespace) {
                return perr(line, 1, "expected `generator [name]`");
            }
            let n = dim.ok_or_else(|| Error::Parse { line, col: 1, msg: "`dim` must precede generators".into() })?;
            if order.is_none() {
                return perr(line, 1, "`cyclotomic_order` must precede generators");
            }
            finish(pending.take(), n, &mut generators)?;
            let name = rest.trim();
            let name = if name.is_empty() { format!("g{}", generators.len() + 1) } else { name.to_string() };
            pending = Some((name, line, Vec::new()));
            continue;
        }
        if pending.is_none() {
            let Some((key, value)) = trimmed.split_once(':') else {
                return perr(line, 1, "expected `key: value`");
            };
            let col = raw.find(':').map_or(1, |c| c + 2);
            let value = value.trim();
            match key.trim() {
                "cyclotomic_order" => match value.parse::<u32>() {
                    Ok(n) if n >= 1 => order = Some(n),
                    _ => return perr(line, col, "cyclotomic_order must be a positive integer"),
                },
                "dim" => match value.parse::<usize>() {
                    Ok(n) if n >= 1 => dim = Some(n),
                    _ => return perr(line, col, "dim must be a positive integer"),
                },
                "variables" => variables = Some(value.split(',').map(|s| s.trim().to_string()).collect()),
                "convention" => convention = Some(ActionConvention::parse(value).map_err(|e| Error::Parse { line, col, msg: e.to_string() })?),
                k => return perr(line, 1, format!("unknown key `{k}`")),
            }
            continue;
        }
        let field = CycField::get(order.expect("checked above"));
        let n = dim.expect("checked above");
        let (_, _, rows) = pending.as_mut().expect("inside a generator block");
        if rows.len() == n {
            return perr(line, 1, format!("more than {n} rows"));
        }
        let mut row = Vec::with_capacity(n);
        let mut offset = 0;
        for entry in content.split(',') {
            let lead = entry.len() - entry.trim_start().len();
            row.push(parse_scalar_at(entry.trim(), field, line, offset + lead)?);
            offset += entry.len() + 1;
        }
        if row.len() != n {
            return perr(line, 1, format!("row has {} entries, expected {n}", row.len()));
        }
        rows.push(row);
    }
    let n = dim.ok_or_else(|| Error::Parse { line: 0, col: 0, msg: "missing `dim`".into() })?;
    let order = order.ok_or_else(|| Error::Parse { line: 0, col: 0, msg: "missing `cyclotomic_order`".into() })?;
    finish(pending.take(), n, &mut generators)?;
    if generators.is_empty() {
        return perr(0, 0, "no generators");
    }
    let variables = variables.unwrap_or_else(|| (1..=n).map(|i| format!("x{i}")).collect());
    if variables.len() != n {
        return perr(0, 0, format!("{} variable names for dimension {n}", variables.len()));
    }
    Ok(GroupFile { cyclotomic_order: order, dim: n, variables, convention, generators })
}

pub fn read_group_file(path: &Path) -> Result<GroupFile> {
    parse_group_file(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    const S: &str = "cyclotomic_order: 12\ndim: 2\ngenerator e\nz^4, 0\n0, z^8\ngenerator\n0, 1\n1, 0\n";

    #[test]
    fn parse_and_round_trip() {
        let g = parse_group_file(S).unwrap();
        assert_eq!(g.generators.len(), 2);
        assert_eq!(g.generators[1].0, "g2");
        assert_eq!(g.variables, vec!["x1", "x2"]);
        let again = parse_group_file(&g.to_text()).unwrap();
        assert_eq!(again, g);
        assert_eq!(again.to_text(), g.to_text());
    }

    #[test]
    fn errors() {
        let bad = S.replace("z^8", "1/(0)");
        match parse_group_file(&bad) {
            Err(Error::Parse { line, col, msg }) => {
                assert_eq!(line, 5);
                assert_eq!(col, 6);
                assert!(msg.contains("division by zero"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_group_file("dim: 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_group_file(&S.replace("0, 1\n", "0\n")), Err(Error::Parse { line: 7, .. })));
        assert!(matches!(parse_group_file("cyclotomic_order: 12\ndim: 1\ngenerator\nz^5, 1\n"), Err(Error::Parse { .. })));
    }
}
