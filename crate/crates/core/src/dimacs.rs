//! DIMACS CNF parsing and a small DPLL solver.
//!
//! This path knows nothing about rays or bases: it reads the exported text
//! back and decides satisfiability on clauses alone, so it serves as an
//! independent check of the coloring solver.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cnf {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i32>>,
}

impl Cnf {
    pub fn parse(text: &str) -> Result<Cnf> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let bad = |message: &str| Error::Parse {
                line: lineno + 1,
                message: message.to_string(),
            };
            if let Some(rest) = line.strip_prefix("p ") {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                if parts.len() != 3 || parts[0] != "cnf" {
                    return Err(bad("malformed problem line"));
                }
                let v = parts[1].parse().map_err(|_| bad("bad variable count"))?;
                let c = parts[2].parse().map_err(|_| bad("bad clause count"))?;
                header = Some((v, c));
                continue;
            }
            let (num_vars, _) = header.ok_or_else(|| bad("clause before problem line"))?;
            for tok in line.split_whitespace() {
                let lit: i32 = tok.parse().map_err(|_| bad("bad literal"))?;
                if lit == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else {
                    if lit.unsigned_abs() as usize > num_vars {
                        return Err(bad("literal out of range"));
                    }
                    current.push(lit);
                }
            }
        }
        let (num_vars, num_clauses) = header.ok_or(Error::Parse {
            line: 0,
            message: "missing problem line".into(),
        })?;
        if !current.is_empty() {
            clauses.push(current);
        }
        if clauses.len() != num_clauses {
            return Err(Error::Parse {
                line: 0,
                message: format!("header declares {num_clauses} clauses, found {}", clauses.len()),
            });
        }
        Ok(Cnf { num_vars, clauses })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SatResult {
    /// Model indexed by variable number minus one.
    Sat(Vec<bool>),
    Unsat,
}

struct Dpll<'a> {
    cnf: &'a Cnf,
    /// Clauses containing each literal, indexed by `literal_slot`.
    occurs: Vec<Vec<usize>>,
    value: Vec<Option<bool>>,
    order: Vec<usize>,
    decisions: u64,
}

fn literal_slot(lit: i32) -> usize {
    let v = lit.unsigned_abs() as usize - 1;
    2 * v + usize::from(lit < 0)
}

impl Dpll<'_> {
    fn lit_value(&self, lit: i32) -> Option<bool> {
        let v = self.value[lit.unsigned_abs() as usize - 1]?;
        Some(if lit > 0 { v } else { !v })
    }

    /// Makes `lit` true and runs unit propagation.
    fn enqueue(&mut self, lit: i32, trail: &mut Vec<usize>) -> bool {
        let mut queue = vec![lit];
        while let Some(lit) = queue.pop() {
            match self.lit_value(lit) {
                Some(true) => continue,
                Some(false) => return false,
                None => {}
            }
            let var = lit.unsigned_abs() as usize - 1;
            self.value[var] = Some(lit > 0);
            trail.push(var);
            // clauses where the opposite literal just became false
            for &ci in &self.occurs[literal_slot(-lit)] {
                let mut unassigned = None;
                let mut open = 0;
                let mut sat = false;
                for &l in &self.cnf.clauses[ci] {
                    match self.lit_value(l) {
                        Some(true) => {
                            sat = true;
                            break;
                        }
                        None => {
                            open += 1;
                            unassigned = Some(l);
                        }
                        Some(false) => {}
                    }
                }
                if sat {
                    continue;
                }
                match (open, unassigned) {
                    (0, _) => return false,
                    (1, Some(l)) => queue.push(l),
                    _ => {}
                }
            }
        }
        true
    }

    fn solve(&mut self) -> bool {
        let Some(var) = self.order.iter().copied().find(|&v| self.value[v].is_none()) else {
            return true;
        };
        self.decisions += 1;
        let lit = var as i32 + 1;
        for choice in [lit, -lit] {
            let mut trail = Vec::new();
            if self.enqueue(choice, &mut trail) && self.solve() {
                return true;
            }
            for v in trail {
                self.value[v] = None;
            }
        }
        false
    }
}

/// Decides satisfiability; also returns the number of branching decisions.
pub fn solve(cnf: &Cnf) -> (SatResult, u64) {
    let mut occurs = vec![Vec::new(); 2 * cnf.num_vars];
    for (ci, clause) in cnf.clauses.iter().enumerate() {
        for &lit in clause {
            occurs[literal_slot(lit)].push(ci);
        }
    }
    let mut order: Vec<usize> = (0..cnf.num_vars).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(occurs[2 * v].len() + occurs[2 * v + 1].len()));
    let mut dpll = Dpll {
        cnf,
        occurs,
        value: vec![None; cnf.num_vars],
        order,
        decisions: 0,
    };
    let mut trail = Vec::new();
    for clause in &cnf.clauses {
        match clause.as_slice() {
            [] => return (SatResult::Unsat, 0),
            [unit]
                if !dpll.enqueue(*unit, &mut trail) => {
                    return (SatResult::Unsat, 0);
                }
            _ => {}
        }
    }
    if dpll.solve() {
        let model = dpll.value.iter().map(|v| v.unwrap_or(false)).collect();
        (SatResult::Sat(model), dpll.decisions)
    } else {
        (SatResult::Unsat, dpll.decisions)
    }
}

/// True if `model` satisfies every clause.
pub fn check_model(cnf: &Cnf, model: &[bool]) -> bool {
    cnf.clauses.iter().all(|c| {
        c.iter().any(|&l| {
            let v = model[l.unsigned_abs() as usize - 1];
            if l > 0 {
                v
            } else {
                !v
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_solve_small() {
        let cnf = Cnf::parse("c demo\np cnf 3 3\n1 2 0\n-1 0\n-2 3 0\n").unwrap();
        assert_eq!(cnf.num_vars, 3);
        match solve(&cnf).0 {
            SatResult::Sat(m) => {
                assert!(check_model(&cnf, &m));
                assert!(!m[0] && m[1] && m[2]);
            }
            SatResult::Unsat => panic!("satisfiable"),
        }
    }

    #[test]
    fn pigeonhole_three_into_two_is_unsat() {
        // p_{i,h}: pigeon i in hole h, var = 2*i + h + 1
        let mut text = String::from("p cnf 6 9\n");
        for i in 0..3 {
            text += &format!("{} {} 0\n", 2 * i + 1, 2 * i + 2);
        }
        for h in 0..2 {
            for i in 0..3 {
                for j in i + 1..3 {
                    text += &format!("-{} -{} 0\n", 2 * i + h + 1, 2 * j + h + 1);
                }
            }
        }
        let cnf = Cnf::parse(&text).unwrap();
        assert_eq!(solve(&cnf).0, SatResult::Unsat);
    }

    #[test]
    fn malformed_inputs() {
        assert!(Cnf::parse("1 2 0\n").is_err());
        assert!(Cnf::parse("p cnf 2 1\n1 3 0\n").is_err());
        assert!(Cnf::parse("p cnf 2 2\n1 2 0\n").is_err());
    }
}
