use crate::Formula;
use std::collections::BTreeSet;
use std::fmt::Write;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: negative literal {lit} in a positive formula")]
    NegativeLiteral { line: usize, lit: i64 },
    #[error("clause {0} is empty")]
    EmptyClause(usize),
    #[error("variable {var} outside 1..={v}")]
    VariableOutOfRange { var: u32, v: u32 },
}

fn perr(line: usize, message: impl Into<String>) -> FormulaError {
    FormulaError::Parse { line, message: message.into() }
}

/// Parses `p pcnf <v> <c>` followed by `c` zero-terminated clause lines.
pub fn parse_formula(text: &str) -> Result<Formula, FormulaError> {
    let mut header: Option<(u32, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = BTreeSet::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let l = raw.trim();
        if l.is_empty() || l == "c" || l.starts_with("c ") {
            continue;
        }
        let Some((v, _)) = header else {
            let toks: Vec<&str> = l.split_whitespace().collect();
            match toks.as_slice() {
                ["p", "pcnf", v, c] => {
                    let v = v.parse().map_err(|_| perr(line, format!("bad variable count `{v}`")))?;
                    let c = c.parse().map_err(|_| perr(line, format!("bad clause count `{c}`")))?;
                    header = Some((v, c));
                }
                _ => return Err(perr(line, "expected `p pcnf <v> <c>`")),
            }
            continue;
        };
        for tok in l.split_whitespace() {
            let lit: i64 = tok.parse().map_err(|_| perr(line, format!("bad literal `{tok}`")))?;
            if lit < 0 {
                return Err(FormulaError::NegativeLiteral { line, lit });
            }
            if lit == 0 {
                if current.is_empty() {
                    return Err(perr(line, "empty clause"));
                }
                clauses.push(std::mem::take(&mut current));
                continue;
            }
            if lit > v as i64 {
                return Err(perr(line, format!("variable {lit} exceeds declared count {v}")));
            }
            current.insert(lit as u32);
        }
    }
    let Some((v, c)) = header else {
        return Err(perr(last_line + 1, "missing header"));
    };
    if !current.is_empty() {
        return Err(perr(last_line, "last clause is not terminated by 0"));
    }
    if clauses.len() != c {
        return Err(perr(last_line, format!("header declares {c} clauses, found {}", clauses.len())));
    }
    Formula::new(v, clauses)
}

/// Canonical `.pcnf` text for a formula.
pub fn to_pcnf(f: &Formula) -> String {
    let mut s = format!("p pcnf {} {}\n", f.v, f.c());
    for cl in &f.clauses {
        for x in cl {
            write!(s, "{x} ").unwrap();
        }
        s.push_str("0\n");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_text() {
        let f = parse_formula("p pcnf 4 3\n1 0\n2 3 0\n2 4 0\n").unwrap();
        assert_eq!(f, Formula::example());
        assert_eq!(f.c(), 3);
    }

    #[test]
    fn negative_literal() {
        let e = parse_formula("p pcnf 2 1\n-2 0\n").unwrap_err();
        assert_eq!(e, FormulaError::NegativeLiteral { line: 2, lit: -2 });
    }

    #[test]
    fn single_variable() {
        let f = parse_formula("c tiny\np pcnf 1 1\n1 0\n").unwrap();
        assert_eq!(f.v, 1);
        assert_eq!(f.clauses, vec![BTreeSet::from([1])]);
    }

    #[test]
    fn duplicates_collapse() {
        let f = parse_formula("p pcnf 3 1\n2 2 3 2 0\n").unwrap();
        assert_eq!(f.clauses[0], BTreeSet::from([2, 3]));
    }

    #[test]
    fn clause_count_mismatch() {
        assert!(matches!(parse_formula("p pcnf 2 2\n1 0\n"), Err(FormulaError::Parse { .. })));
    }

    #[test]
    fn out_of_range() {
        assert!(parse_formula("p pcnf 2 1\n3 0\n").is_err());
    }

    #[test]
    fn round_trip() {
        let f = Formula::example();
        assert_eq!(parse_formula(&to_pcnf(&f)).unwrap(), f);
    }
}
