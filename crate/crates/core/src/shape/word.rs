//! Word rewriting shared by the presentations of the shape categories.

use alloc::vec::Vec;

/// Outcome of rewriting an adjacent pair `left right` (functional order).
pub(crate) enum Step<G> {
    /// The pair composes to an identity.
    Cancel,
    /// Replace by two letters.
    Two(G, G),
}

/// Rewrites `word` to normal form, always firing the leftmost redex and
/// backing up one position afterwards so new redexes to the left are seen.
/// The rule systems handed to this function are terminating.
pub(crate) fn rewrite<G: Copy>(word: &mut Vec<G>, rule: impl Fn(G, G) -> Option<Step<G>>) {
    let mut i = 0;
    while i + 1 < word.len() {
        match rule(word[i], word[i + 1]) {
            None => i += 1,
            Some(Step::Cancel) => {
                word.drain(i..i + 2);
                i = i.saturating_sub(1);
            }
            Some(Step::Two(a, b)) => {
                word[i] = a;
                word[i + 1] = b;
                i = i.saturating_sub(1);
            }
        }
    }
}
