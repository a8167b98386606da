use std::fmt;

use crate::error::{Error, Result};

/// Largest variable count [`brute_force_sat`] accepts by default.
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 20;

/// A literal over a variable numbered from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn new(var: usize, positive: bool) -> Self {
        Literal { var, positive }
    }

    /// DIMACS encoding: `var` or `-var`.
    pub fn from_dimacs(value: i64) -> Self {
        Literal::new(value.unsigned_abs() as usize, value > 0)
    }

    pub fn to_dimacs(self) -> i64 {
        if self.positive {
            self.var as i64
        } else {
            -(self.var as i64)
        }
    }

    pub fn holds(self, assignment: &[bool]) -> bool {
        assignment[self.var - 1] == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

/// A CNF formula over an even number of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<Literal>>,
    padded: bool,
}

impl CnfFormula {
    /// Builds a formula, adding one unused variable when `num_vars` is odd.
    /// Empty clauses are kept.
    pub fn new(num_vars: usize, clauses: Vec<Vec<Literal>>) -> Result<Self> {
        for clause in &clauses {
            for lit in clause {
                if lit.var == 0 || lit.var > num_vars {
                    return Err(Error::Malformed(format!(
                        "literal {lit} out of range 1..={num_vars}"
                    )));
                }
            }
        }
        let padded = num_vars % 2 == 1;
        Ok(CnfFormula {
            num_vars: num_vars + usize::from(padded),
            clauses,
            padded,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    /// Whether an unused variable was added to make the count even.
    pub fn was_padded(&self) -> bool {
        self.padded
    }

    pub fn clause_satisfied(&self, clause: usize, assignment: &[bool]) -> bool {
        self.clauses[clause].iter().any(|lit| lit.holds(assignment))
    }

    /// Whether `assignment` (one value per variable, `x1` first) satisfies
    /// every clause.
    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        assert_eq!(assignment.len(), self.num_vars, "assignment length");
        (0..self.clauses.len()).all(|c| self.clause_satisfied(c, assignment))
    }

    /// Serializes in DIMACS form, declaring the (possibly padded) count.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                out.push_str(&lit.to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }
}

/// Parses DIMACS CNF. `c` lines are comments, clauses are terminated by `0`
/// and may span lines, and a `%` line ends the input.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<Literal>> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut open_line = 0;
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        last_line = line_no;
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(Error::parse(line_no, "duplicate problem line"));
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 4 || tokens[0] != "p" || tokens[1] != "cnf" {
                return Err(Error::parse(line_no, "expected `p cnf <vars> <clauses>`"));
            }
            let vars = tokens[2].parse().map_err(|_| {
                Error::parse(line_no, format!("invalid variable count `{}`", tokens[2]))
            })?;
            let count = tokens[3].parse().map_err(|_| {
                Error::parse(line_no, format!("invalid clause count `{}`", tokens[3]))
            })?;
            header = Some((vars, count));
            continue;
        }
        let Some((vars, _)) = header else {
            return Err(Error::parse(line_no, "clause before `p cnf` header"));
        };
        for token in line.split_whitespace() {
            let value: i64 = token
                .parse()
                .map_err(|_| Error::parse(line_no, format!("invalid literal `{token}`")))?;
            if value == 0 {
                clauses.push(std::mem::take(&mut current));
                continue;
            }
            if value.unsigned_abs() as usize > vars {
                return Err(Error::parse(
                    line_no,
                    format!("literal {value} out of range 1..={vars}"),
                ));
            }
            if current.is_empty() {
                open_line = line_no;
            }
            current.push(Literal::from_dimacs(value));
        }
    }

    let Some((vars, count)) = header else {
        return Err(Error::parse(last_line.max(1), "missing `p cnf` header"));
    };
    if !current.is_empty() {
        return Err(Error::parse(
            open_line,
            "clause is missing its `0` terminator",
        ));
    }
    if clauses.len() != count {
        return Err(Error::parse(
            last_line.max(1),
            format!("declared {count} clauses, found {}", clauses.len()),
        ));
    }
    CnfFormula::new(vars, clauses)
}

/// First satisfying assignment in ascending binary order, reading `x1` as
/// the most significant bit. Uses [`DEFAULT_BRUTE_FORCE_CAP`].
pub fn brute_force_sat(formula: &CnfFormula) -> Result<Option<Vec<bool>>> {
    brute_force_sat_capped(formula, DEFAULT_BRUTE_FORCE_CAP)
}

pub fn brute_force_sat_capped(formula: &CnfFormula, cap: usize) -> Result<Option<Vec<bool>>> {
    let n = formula.num_vars();
    if n > cap {
        return Err(Error::ScaleCap {
            what: "variables",
            actual: n as u128,
            cap: cap as u128,
        });
    }
    let mut assignment = vec![false; n];
    for mask in 0u64..(1u64 << n) {
        for (i, value) in assignment.iter_mut().enumerate() {
            *value = mask >> (n - 1 - i) & 1 == 1;
        }
        if formula.satisfied_by(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_example() {
        let f = parse_dimacs("c example\np cnf 2 2\n1 -2 0\n-1 2 0\n").unwrap();
        assert_eq!(f.num_vars(), 2);
        assert_eq!(f.num_clauses(), 2);
        assert!(!f.was_padded());
        assert_eq!(
            f.clauses()[0],
            [Literal::new(1, true), Literal::new(2, false)]
        );
        assert_eq!(parse_dimacs(&f.to_dimacs()).unwrap(), f);
    }

    #[test]
    fn odd_variable_count_is_padded() {
        let f = parse_dimacs("p cnf 3 1\n1 0\n").unwrap();
        assert_eq!(f.num_vars(), 4);
        assert_eq!(f.num_clauses(), 1);
        assert!(f.was_padded());
    }

    #[test]
    fn no_clauses() {
        let f = parse_dimacs("p cnf 2 0\n").unwrap();
        assert_eq!((f.num_vars(), f.num_clauses()), (2, 0));
    }

    #[test]
    fn multi_line_clauses_and_end_marker() {
        let f = parse_dimacs("p cnf 4 2\n1 2\n 3 0 -4\n0\n%\n0\n").unwrap();
        assert_eq!(f.clauses()[0].len(), 3);
        assert_eq!(f.clauses()[1], [Literal::new(4, false)]);
    }

    #[test]
    fn empty_clause_is_kept() {
        let f = parse_dimacs("p cnf 2 2\n0\n1 0\n").unwrap();
        assert!(f.clauses()[0].is_empty());
        assert_eq!(brute_force_sat(&f).unwrap(), None);
    }

    #[test]
    fn parse_errors() {
        for (text, expected) in [
            ("p dnf 2 1\n1 0\n", 1),
            ("p cnf x 1\n", 1),
            ("1 2 0\n", 1),
            ("p cnf 2 1\n1 3 0\n", 2),
            ("p cnf 2 2\n1 0\n-2\n", 3),
            ("p cnf 2 2\n1 0\n", 2),
            ("p cnf 2 1\n1 a 0\n", 2),
        ] {
            match parse_dimacs(text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, expected, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn brute_force_order() {
        let f = parse_dimacs("p cnf 2 2\n1 -2 0\n-1 2 0\n").unwrap();
        assert_eq!(brute_force_sat(&f).unwrap(), Some(vec![false, false]));
        let f = parse_dimacs("p cnf 2 2\n1 0\n2 -1 0\n").unwrap();
        assert_eq!(brute_force_sat(&f).unwrap(), Some(vec![true, true]));
        // x2 alone: 01 is found before 10
        let f = parse_dimacs("p cnf 2 1\n2 0\n").unwrap();
        assert_eq!(brute_force_sat(&f).unwrap(), Some(vec![false, true]));
    }

    #[test]
    fn brute_force_edges() {
        let contradiction = parse_dimacs("p cnf 2 2\n1 0\n-1 0\n").unwrap();
        assert_eq!(brute_force_sat(&contradiction).unwrap(), None);
        let empty = CnfFormula::new(4, vec![]).unwrap();
        assert_eq!(brute_force_sat(&empty).unwrap(), Some(vec![false; 4]));
        let big = CnfFormula::new(22, vec![]).unwrap();
        assert!(brute_force_sat(&big).unwrap_err().is_scale_cap());
        assert!(brute_force_sat_capped(&big, 22).is_ok());
    }
}
