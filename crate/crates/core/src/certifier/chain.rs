use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalar::{fmt_ratio, serde_ratio, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
}

impl Relation {
    fn test(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
        })
    }
}

/// One recomputed inequality (or identity) of a proof chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStep {
    pub label: String,
    #[serde(with = "serde_ratio")]
    pub lhs: Rational,
    pub relation: Relation,
    #[serde(with = "serde_ratio")]
    pub rhs: Rational,
    pub holds: bool,
}

impl fmt::Display for ChainStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}: {} {} {}",
            if self.holds { "ok" } else { "FAIL" },
            self.label,
            fmt_ratio(&self.lhs),
            self.relation,
            fmt_ratio(&self.rhs)
        )
    }
}

/// Named exact values plus the ordered steps relating them.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Chain {
    pub values: BTreeMap<String, Rational>,
    pub steps: Vec<ChainStep>,
}

impl Chain {
    pub fn value(&mut self, name: &str, v: Rational) -> Rational {
        self.values.insert(name.to_string(), v);
        v
    }

    pub fn get(&self, name: &str) -> Option<Rational> {
        self.values.get(name).copied()
    }

    pub fn le(&mut self, label: &str, lhs: Rational, rhs: Rational) {
        self.push(label, lhs, Relation::Le, rhs);
    }

    pub fn same(&mut self, label: &str, lhs: Rational, rhs: Rational) {
        self.push(label, lhs, Relation::Eq, rhs);
    }

    fn push(&mut self, label: &str, lhs: Rational, relation: Relation, rhs: Rational) {
        self.steps.push(ChainStep {
            label: label.to_string(),
            holds: relation.test(&lhs, &rhs),
            lhs,
            relation,
            rhs,
        });
    }

    pub fn all_hold(&self) -> bool {
        self.steps.iter().all(|s| s.holds)
    }

    pub fn failed(&self) -> impl Iterator<Item = &ChainStep> {
        self.steps.iter().filter(|s| !s.holds)
    }
}

/// A structural property of the constructed objects.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: &str, holds: bool, detail: impl FnOnce() -> String) -> Self {
        Check {
            name: name.to_string(),
            holds,
            detail: (!holds).then(detail),
        }
    }
}
