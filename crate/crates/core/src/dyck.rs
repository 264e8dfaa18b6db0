//! Dyck paths: nonnegative lattice excursions of up and down steps.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A single step of a lattice path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
}

/// A Dyck path of length `2n`: every prefix has at least as many up steps as
/// down steps, and the totals are equal.
///
/// Paths are immutable after construction; [`DyckPath::new`] rejects malformed
/// words, so every value of this type is a valid excursion.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DyckError {
    /// Some prefix dips below the axis.
    NegativeHeight { position: usize },
    /// The word does not return to height zero.
    NonzeroFinalHeight { height: usize },
    /// A character other than `u` or `d` in a textual word.
    BadCharacter { position: usize, ch: char },
}

impl fmt::Display for DyckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DyckError::NegativeHeight { position } => {
                write!(f, "path goes below the axis at step {position}")
            }
            DyckError::NonzeroFinalHeight { height } => {
                write!(f, "path ends at height {height}, expected 0")
            }
            DyckError::BadCharacter { position, ch } => {
                write!(f, "unexpected character {ch:?} at position {position}")
            }
        }
    }
}

impl core::error::Error for DyckError {}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self, DyckError> {
        let mut height: usize = 0;
        for (i, s) in steps.iter().enumerate() {
            match s {
                Step::Up => height += 1,
                Step::Down => {
                    if height == 0 {
                        return Err(DyckError::NegativeHeight { position: i });
                    }
                    height -= 1;
                }
            }
        }
        if height != 0 {
            return Err(DyckError::NonzeroFinalHeight { height });
        }
        Ok(DyckPath { steps })
    }

    /// The empty path (n = 0).
    pub fn empty() -> Self {
        DyckPath { steps: Vec::new() }
    }

    /// Parses a word over `{u, d}`.
    pub fn parse(word: &str) -> Result<Self, DyckError> {
        let mut steps = Vec::with_capacity(word.len());
        for (i, ch) in word.chars().enumerate() {
            match ch {
                'u' => steps.push(Step::Up),
                'd' => steps.push(Step::Down),
                _ => return Err(DyckError::BadCharacter { position: i, ch }),
            }
        }
        DyckPath::new(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of up steps (the order `n` of the path).
    pub fn order(&self) -> usize {
        self.steps.len() / 2
    }

    /// For each up step `u_i` (i = 1..n), the length of the Dyck factor
    /// strictly between `u_i` and its matching down step.
    pub fn match_lengths(&self) -> Vec<usize> {
        let n = self.order();
        let mut lengths = Vec::with_capacity(n);
        let mut stack: Vec<(usize, usize)> = Vec::new(); // (up index, position)
        for (pos, s) in self.steps.iter().enumerate() {
            match s {
                Step::Up => {
                    stack.push((lengths.len(), pos));
                    lengths.push(0);
                }
                Step::Down => {
                    let (i, up_pos) = stack.pop().expect("valid path");
                    lengths[i] = pos - up_pos - 1;
                }
            }
        }
        lengths
    }

    /// Type word over `{N, E}` of length `n - 1`: letter `i` is `N` iff the
    /// `i`-th up step is immediately followed by a down step.
    pub fn path_type(&self) -> String {
        let n = self.order();
        let mut word = String::new();
        let mut ups_seen = 0;
        for w in self.steps.windows(2) {
            if w[0] == Step::Up {
                ups_seen += 1;
                if ups_seen == n {
                    break;
                }
                word.push(if w[1] == Step::Down { 'N' } else { 'E' });
            }
        }
        word
    }

    /// Number of initial up steps.
    pub fn initial_rise(&self) -> usize {
        self.steps.iter().take_while(|s| **s == Step::Up).count()
    }

    /// Number of final down steps.
    pub fn final_descent(&self) -> usize {
        self.steps.iter().rev().take_while(|s| **s == Step::Down).count()
    }

    /// All Dyck paths of order `n`, in lexicographic order (`u < d`).
    pub fn enumerate(n: usize) -> Vec<DyckPath> {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(2 * n);
        fn rec(prefix: &mut Vec<Step>, height: usize, ups_left: usize, out: &mut Vec<DyckPath>) {
            if ups_left == 0 && height == 0 {
                out.push(DyckPath { steps: prefix.clone() });
                return;
            }
            if ups_left > 0 {
                prefix.push(Step::Up);
                rec(prefix, height + 1, ups_left - 1, out);
                prefix.pop();
            }
            if height > 0 {
                prefix.push(Step::Down);
                rec(prefix, height - 1, ups_left, out);
                prefix.pop();
            }
        }
        rec(&mut prefix, 0, n, &mut out);
        out
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(if *s == Step::Up { "u" } else { "d" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(w: &str) -> DyckPath {
        DyckPath::parse(w).unwrap()
    }

    #[test]
    fn rejects_malformed_words() {
        assert!(matches!(
            DyckPath::parse("du"),
            Err(DyckError::NegativeHeight { position: 0 })
        ));
        assert!(matches!(
            DyckPath::parse("uud"),
            Err(DyckError::NonzeroFinalHeight { height: 1 })
        ));
        assert!(matches!(
            DyckPath::parse("ux"),
            Err(DyckError::BadCharacter { position: 1, .. })
        ));
    }

    #[test]
    fn match_lengths_examples() {
        assert_eq!(p("udud").match_lengths(), alloc::vec![0, 0]);
        assert_eq!(p("uudd").match_lengths(), alloc::vec![2, 0]);
        // brute-force scan by hand: the first up step of uududd matches the
        // last down step, enclosing a factor of length 4
        assert_eq!(p("uududd").match_lengths(), alloc::vec![4, 0, 0]);
    }

    #[test]
    fn type_examples() {
        assert_eq!(p("udud").path_type(), "N");
        assert_eq!(p("uudd").path_type(), "E");
        assert_eq!(p("uuddud").path_type(), "EN");
    }

    #[test]
    fn rise_and_descent() {
        assert_eq!(p("uududd").initial_rise(), 2);
        assert_eq!(p("uududd").final_descent(), 2);
        assert_eq!(p("").initial_rise(), 0);
    }

    #[test]
    fn enumerate_catalan() {
        for (n, catalan) in [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14), (5, 42)] {
            assert_eq!(DyckPath::enumerate(n).len(), catalan);
        }
    }
}
