//! DIMACS CNF with two extension lines: `m <atom>... 0` adds atoms to the
//! minimized set and `z <atom>... 0` to the irrelevant set.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::BufRead;

use thiserror::Error;

use crate::engine::{CircInstance, InstanceError};
use crate::types::{Atom, Lit, Theory};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Circumscription,
    Mcs,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    pub num_atoms: u32,
    /// Clauses as written, duplicates and tautologies included.
    pub clauses: Vec<Vec<Lit>>,
    pub minimized: BTreeSet<Atom>,
    pub irrelevant: BTreeSet<Atom>,
    pub mode: Mode,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `p cnf` header")]
    MissingHeader,
    #[error("duplicate `p cnf` header")]
    DuplicateHeader,
    #[error("malformed header")]
    BadHeader,
    #[error("literal {0} out of range")]
    OutOfRange(i64),
    #[error("atom {0} is both minimized and irrelevant")]
    Overlap(u32),
    #[error("line does not end with 0")]
    Unterminated,
    #[error("unexpected token `{0}`")]
    BadToken(String),
    #[error("`m`/`z` lines are not allowed in mcs mode")]
    GroupInMcsMode,
    #[error("read failed: {0}")]
    Io(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn parse_int(tok: &str, line: usize) -> Result<i64, ParseError> {
    tok.parse::<i64>()
        .map_err(|_| err(line, ParseErrorKind::BadToken(tok.to_string())))
}

/// Splits a clause line at each `0`; trailing tokens without a `0` are an
/// error.
fn zero_terminated(tokens: &[&str], line: usize) -> Result<Vec<Vec<i64>>, ParseError> {
    let mut groups = Vec::new();
    let mut current = Vec::new();
    for tok in tokens {
        match parse_int(tok, line)? {
            0 => groups.push(std::mem::take(&mut current)),
            v => current.push(v),
        }
    }
    if !current.is_empty() || groups.is_empty() {
        return Err(err(line, ParseErrorKind::Unterminated));
    }
    Ok(groups)
}

pub fn parse<R: BufRead>(reader: R, mode: Mode) -> Result<ProblemFile, ParseError> {
    let mut header: Option<u32> = None;
    let mut pf = ProblemFile {
        num_atoms: 0,
        clauses: Vec::new(),
        minimized: BTreeSet::new(),
        irrelevant: BTreeSet::new(),
        mode,
    };
    let mut line_no = 0;
    for line in reader.lines() {
        line_no += 1;
        let line = line.map_err(|e| err(line_no, ParseErrorKind::Io(e.to_string())))?;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let Some(&first) = tokens.first() else {
            continue;
        };
        match first {
            _ if first.starts_with('c') => continue,
            "%" => continue,
            "p" => {
                if header.is_some() {
                    return Err(err(line_no, ParseErrorKind::DuplicateHeader));
                }
                let [_, "cnf", n, m] = tokens[..] else {
                    return Err(err(line_no, ParseErrorKind::BadHeader));
                };
                let n: u32 = n
                    .parse()
                    .map_err(|_| err(line_no, ParseErrorKind::BadHeader))?;
                let _: usize = m
                    .parse()
                    .map_err(|_| err(line_no, ParseErrorKind::BadHeader))?;
                header = Some(n);
                pf.num_atoms = n;
            }
            "m" | "z" => {
                let Some(n) = header else {
                    return Err(err(line_no, ParseErrorKind::MissingHeader));
                };
                if mode == Mode::Mcs {
                    return Err(err(line_no, ParseErrorKind::GroupInMcsMode));
                }
                let values = tokens[1..]
                    .iter()
                    .map(|t| parse_int(t, line_no))
                    .collect::<Result<Vec<_>, _>>()?;
                let Some((0, atoms)) = values.split_last() else {
                    return Err(err(line_no, ParseErrorKind::Unterminated));
                };
                for &v in atoms {
                    if v < 1 || v > n as i64 {
                        return Err(err(line_no, ParseErrorKind::OutOfRange(v)));
                    }
                    let atom = Atom::new(v as u32);
                    let (target, other) = if first == "m" {
                        (&mut pf.minimized, &pf.irrelevant)
                    } else {
                        (&mut pf.irrelevant, &pf.minimized)
                    };
                    if other.contains(&atom) {
                        return Err(err(line_no, ParseErrorKind::Overlap(atom.id())));
                    }
                    target.insert(atom);
                }
            }
            _ => {
                let Some(n) = header else {
                    return Err(err(line_no, ParseErrorKind::MissingHeader));
                };
                for group in zero_terminated(&tokens, line_no)? {
                    let mut clause = Vec::with_capacity(group.len());
                    for v in group {
                        if v.unsigned_abs() > n as u64 {
                            return Err(err(line_no, ParseErrorKind::OutOfRange(v)));
                        }
                        clause.push(Lit::from_dimacs(v));
                    }
                    pf.clauses.push(clause);
                }
            }
        }
    }
    if header.is_none() {
        return Err(err(line_no, ParseErrorKind::MissingHeader));
    }
    Ok(pf)
}

pub fn parse_str(text: &str, mode: Mode) -> Result<ProblemFile, ParseError> {
    parse(text.as_bytes(), mode)
}

fn atom_line(tag: char, atoms: &BTreeSet<Atom>) -> String {
    let mut s = String::from(tag);
    for a in atoms {
        let _ = write!(s, " {a}");
    }
    s.push_str(" 0\n");
    s
}

/// Inverse of `parse`, up to comments and whitespace.
pub fn render(pf: &ProblemFile) -> String {
    let mut s = format!("p cnf {} {}\n", pf.num_atoms, pf.clauses.len());
    for c in &pf.clauses {
        for l in c {
            let _ = write!(s, "{l} ");
        }
        s.push_str("0\n");
    }
    if !pf.minimized.is_empty() {
        s.push_str(&atom_line('m', &pf.minimized));
    }
    if !pf.irrelevant.is_empty() {
        s.push_str(&atom_line('z', &pf.irrelevant));
    }
    s
}

impl ProblemFile {
    pub fn theory(&self) -> Theory {
        let mut t = Theory::new(self.num_atoms);
        for c in &self.clauses {
            t.add_clause(c);
        }
        t
    }

    pub fn to_instance(&self) -> Result<CircInstance, InstanceError> {
        let p: Vec<Atom> = self.minimized.iter().copied().collect();
        let z: Vec<Atom> = self.irrelevant.iter().copied().collect();
        CircInstance::new(self.theory(), &p, &z)
    }
}
