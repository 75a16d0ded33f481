//! Branch-and-prune enumeration of all minimal transversals of a bitmask
//! set system.
//!
//! The search branches on the first set not hit by the current partial
//! solution: for the i-th element of that set it adds the element and
//! forbids the earlier ones, so every transversal is generated along exactly
//! one path. A per-element count of "private" sets (sets whose intersection
//! with the partial solution is that single element) is maintained
//! incrementally; a branch is pruned as soon as some chosen element loses
//! its last private set, which can never be undone by further growth. At a
//! leaf every element has a private set, which is exactly minimality.

use std::ops::ControlFlow;

struct Searcher<'a, F>
where
    F: FnMut(u64) -> ControlFlow<()>,
{
    sets: &'a [u64],
    /// Indices of the sets containing each ground element.
    containing: Vec<Vec<u32>>,
    /// For each chosen element, the number of its currently private sets.
    private_count: Vec<u32>,
    partial: u64,
    undo_log: Vec<u32>,
    visit: F,
}

impl<F> Searcher<'_, F>
where
    F: FnMut(u64) -> ControlFlow<()>,
{
    /// Adds `e` to the partial solution, updating private counts.
    /// Returns the undo-log watermark and whether the branch stays viable.
    fn push(&mut self, e: usize) -> (usize, bool) {
        let before = self.partial;
        let mark = self.undo_log.len();
        let mut own_privates = 0u32;
        let mut viable = true;
        for &s in &self.containing[e] {
            let inter = self.sets[s as usize] & before;
            if inter == 0 {
                own_privates += 1;
            } else if inter.count_ones() == 1 {
                let p = inter.trailing_zeros() as usize;
                self.private_count[p] -= 1;
                self.undo_log.push(p as u32);
                if self.private_count[p] == 0 {
                    viable = false;
                }
            }
        }
        self.private_count[e] = own_privates;
        self.partial |= 1 << e;
        (mark, viable && own_privates > 0)
    }

    fn pop(&mut self, e: usize, mark: usize) {
        self.partial &= !(1u64 << e);
        self.private_count[e] = 0;
        for p in self.undo_log.drain(mark..) {
            self.private_count[p as usize] += 1;
        }
    }

    fn search(&mut self, excluded: u64) -> ControlFlow<()> {
        let unhit = self.sets.iter().position(|&m| m & self.partial == 0);
        let Some(first_unhit) = unhit else {
            return (self.visit)(self.partial);
        };
        let set_mask = self.sets[first_unhit];
        let mut earlier = 0u64;
        let mut rest = set_mask;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            let bit = 1u64 << e;
            rest &= rest - 1;
            if excluded & bit == 0 {
                let (mark, viable) = self.push(e);
                let flow = if viable {
                    self.search(excluded | earlier)
                } else {
                    ControlFlow::Continue(())
                };
                self.pop(e, mark);
                flow?;
            }
            earlier |= bit;
        }
        ControlFlow::Continue(())
    }
}

/// Calls `visit` once per minimal transversal (as a bitmask over
/// `0..ground`), in a deterministic search order. Returns `false` if the
/// visitor aborted the enumeration. A set system containing an empty set
/// has no transversal at all, so nothing is visited.
pub(crate) fn for_each_minimal_transversal<F>(ground: usize, sets: &[u64], visit: F) -> bool
where
    F: FnMut(u64) -> ControlFlow<()>,
{
    assert!(ground <= 64, "engine is limited to 64 ground elements");
    if sets.iter().any(|&m| m == 0) {
        return true;
    }
    let mut containing = vec![Vec::new(); ground];
    for (j, &mask) in sets.iter().enumerate() {
        let mut rest = mask;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            containing[e].push(j as u32);
        }
    }
    let mut searcher = Searcher {
        sets,
        containing,
        private_count: vec![0; ground],
        partial: 0,
        undo_log: Vec::new(),
        visit,
    };
    searcher.search(0).is_continue()
}

/// Decodes a bitmask into a sorted id list.
pub(crate) fn mask_to_vec(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        out.push(rest.trailing_zeros() as usize);
        rest &= rest - 1;
    }
    out
}
