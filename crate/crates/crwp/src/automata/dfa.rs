use std::collections::BTreeSet;
use std::collections::HashMap;
use std::hash::Hash;
use std::sync::Arc;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};

/// A deterministic finite automaton with a total transition map.
#[derive(Debug, Clone)]
pub struct Dfa {
    alphabet: Arc<Alphabet>,
    num_states: usize,
    start: usize,
    finals: BTreeSet<usize>,
    /// `table[state][letter]` is the successor state.
    table: Vec<Vec<usize>>,
}

impl Dfa {
    pub fn new(
        alphabet: Arc<Alphabet>,
        table: Vec<Vec<usize>>,
        start: usize,
        finals: BTreeSet<usize>,
    ) -> Result<Self> {
        let n = table.len();
        if start >= n {
            return Err(Error::InvalidMachine("start state out of range".into()));
        }
        for row in &table {
            if row.len() != alphabet.len() {
                return Err(Error::InvalidMachine(
                    "transition table is not total over the alphabet".into(),
                ));
            }
            if row.iter().any(|&t| t >= n) {
                return Err(Error::InvalidMachine("transition target out of range".into()));
            }
        }
        if finals.iter().any(|&f| f >= n) {
            return Err(Error::InvalidMachine("final state out of range".into()));
        }
        Ok(Dfa {
            alphabet,
            num_states: n,
            start,
            finals,
            table,
        })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_final(&self, s: usize) -> bool {
        self.finals.contains(&s)
    }

    pub fn step(&self, s: usize, l: Letter) -> usize {
        self.table[s][l.0 as usize]
    }

    pub fn accepts(&self, word: &[Letter]) -> Result<bool> {
        let mut s = self.start;
        for &l in word {
            if (l.0 as usize) >= self.alphabet.len() {
                return Err(Error::UnknownLetter(format!("letter index {}", l.0)));
            }
            s = self.step(s, l);
        }
        Ok(self.is_final(s))
    }

    /// A DFA accepting every word (single all-accepting state).
    pub fn all_accepting(alphabet: Arc<Alphabet>) -> Self {
        let table = vec![vec![0; alphabet.len()]];
        Dfa {
            alphabet,
            num_states: 1,
            start: 0,
            finals: BTreeSet::from([0]),
            table,
        }
    }

    /// A DFA rejecting every word.
    pub fn all_rejecting(alphabet: Arc<Alphabet>) -> Self {
        let table = vec![vec![0; alphabet.len()]];
        Dfa {
            alphabet,
            num_states: 1,
            start: 0,
            finals: BTreeSet::new(),
            table,
        }
    }
}

/// Worklist-style builder over hashable state keys.  Construction loops call
/// [`DfaBuilder::state`] to intern keys and must eventually set a transition
/// for every (state, letter) pair.
pub struct DfaBuilder<K> {
    alphabet: Arc<Alphabet>,
    keys: Vec<K>,
    index: HashMap<K, usize>,
    table: Vec<Vec<Option<usize>>>,
    finals: BTreeSet<usize>,
}

impl<K: Eq + Hash + Clone> DfaBuilder<K> {
    pub fn new(alphabet: Arc<Alphabet>) -> Self {
        DfaBuilder {
            alphabet,
            keys: Vec::new(),
            index: HashMap::new(),
            table: Vec::new(),
            finals: BTreeSet::new(),
        }
    }

    pub fn state(&mut self, key: K) -> usize {
        if let Some(&s) = self.index.get(&key) {
            return s;
        }
        let s = self.keys.len();
        self.keys.push(key.clone());
        self.index.insert(key, s);
        self.table.push(vec![None; self.alphabet.len()]);
        s
    }

    pub fn key(&self, s: usize) -> &K {
        &self.keys[s]
    }

    pub fn num_states(&self) -> usize {
        self.keys.len()
    }

    pub fn set(&mut self, from: usize, l: Letter, to: usize) {
        self.table[from][l.0 as usize] = Some(to);
    }

    pub fn mark_final(&mut self, s: usize) {
        self.finals.insert(s);
    }

    pub fn finish(self, start: usize) -> Result<Dfa> {
        let mut table = Vec::with_capacity(self.table.len());
        for row in self.table {
            let row: Option<Vec<usize>> = row.into_iter().collect();
            table.push(row.ok_or_else(|| {
                Error::InvalidMachine("builder left a transition unset".into())
            })?);
        }
        Dfa::new(self.alphabet, table, start, self.finals)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totality_is_enforced() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let err = Dfa::new(ab, vec![vec![0]], 0, BTreeSet::new());
        assert!(err.is_err());
    }

    #[test]
    fn trivial_acceptors() {
        let ab = Alphabet::new(["a"]).unwrap();
        let all = Dfa::all_accepting(ab.clone());
        let none = Dfa::all_rejecting(ab.clone());
        let w = ab.parse_word("a a").unwrap();
        assert!(all.accepts(&w).unwrap());
        assert!(!none.accepts(&w).unwrap());
    }
}
