//! Loader for the parser corpus in `tests/data/parser_corpus.txt`.

#![allow(dead_code)]

use leversha_core::script::{self, Pos};

pub const CORPUS: &str = include_str!("../data/parser_corpus.txt");

pub enum Case {
    Accept(String),
    Reject { pos: Pos, source: String },
}

pub fn cases() -> Vec<Case> {
    CORPUS
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|line| {
            let (tag, rest) = line.split_at(2);
            match tag {
                "+ " => Case::Accept(rest.replace("\\n", "\n")),
                "- " => {
                    let (at, source) = rest.split_once(' ').expect("position then source");
                    let (l, c) = at.split_once(':').expect("line:col");
                    Case::Reject {
                        pos: Pos {
                            line: l.parse().unwrap(),
                            col: c.parse().unwrap(),
                        },
                        source: source.replace("\\n", "\n"),
                    }
                }
                _ => panic!("bad corpus line {line:?}"),
            }
        })
        .collect()
}

pub fn counts() -> (usize, usize) {
    let all = cases();
    let accepted = all.iter().filter(|c| matches!(c, Case::Accept(_))).count();
    (accepted, all.len() - accepted)
}

/// Describes every case that does not behave as recorded.
pub fn mismatches() -> Vec<String> {
    cases()
        .into_iter()
        .filter_map(|case| match case {
            Case::Accept(source) => {
                let report = script::run_source(&source);
                match &report.error {
                    Some(e) => Some(format!("{source:?} was rejected: {e}")),
                    None if !report.passed() => Some(format!("{source:?} failed an assert")),
                    None => None,
                }
            }
            Case::Reject { pos, source } => match script::run_source(&source).error {
                None => Some(format!("{source:?} was accepted")),
                Some(err) if err.pos() != pos => Some(format!("{source:?}: expected {pos}, got {err}")),
                Some(_) => None,
            },
        })
        .collect()
}
