//! Shared letter/alphabet plumbing for words and machines.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An index into an [`Alphabet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(pub u32);

/// The reserved separator between the two sides of a word-problem string.
pub const HASH: &str = "#";

/// A finite set of named letters.  Machines hold an `Arc<Alphabet>` and two
/// machines are compatible when their alphabets have equal name lists.
#[derive(Debug)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, Letter>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}
impl Eq for Alphabet {}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), Letter(i as u32)).is_some() {
                return Err(Error::InvalidMachine(format!("duplicate letter `{n}`")));
            }
        }
        Ok(Arc::new(Alphabet { names, index }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.names[l.0 as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn lookup(&self, name: &str) -> Option<Letter> {
        self.index.get(name).copied()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.names.len() as u32).map(Letter)
    }

    /// The `#` letter, if this alphabet has one.
    pub fn hash(&self) -> Option<Letter> {
        self.lookup(HASH)
    }

    /// Parses a whitespace-separated word.
    pub fn parse_word(&self, text: &str) -> Result<Vec<Letter>> {
        text.split_whitespace()
            .map(|tok| {
                self.lookup(tok)
                    .ok_or_else(|| Error::UnknownLetter(tok.to_string()))
            })
            .collect()
    }

    pub fn format_word(&self, word: &[Letter]) -> String {
        word.iter()
            .map(|&l| self.name(l))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Checks that two machine alphabets agree.
pub fn require_same(a: &Arc<Alphabet>, b: &Arc<Alphabet>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch)
    }
}
