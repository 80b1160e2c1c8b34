//! Mutable search node: orbit statuses, ridge degrees, and a trail for
//! undoing assignments.

use super::tables::Tables;
use crate::vertex_set::VertexSet;

pub const UNDECIDED: u8 = 0;
pub const IN: u8 = 1;
pub const OUT: u8 = 2;

pub struct State<'t> {
    pub t: &'t Tables,
    min_facets: usize,
    pub status: Vec<u8>,
    ridge_deg: Vec<u8>,
    /// Undecided orbits through each ridge with one facet there.
    undec_single: Vec<u16>,
    /// Undecided orbits through each ridge with two or more facets there.
    undec_multi: Vec<u16>,
    /// Ridges of degree exactly one, with positions for O(1) removal.
    open: Vec<u32>,
    open_pos: Vec<u32>,
    pub in_facets: usize,
    undec_facets: usize,
    trail: Vec<u32>,
    pending: Vec<(u32, u8)>,
    queue: Vec<u32>,
}

const NOT_OPEN: u32 = u32::MAX;

impl<'t> State<'t> {
    pub fn new(t: &'t Tables, min_facets: usize) -> Self {
        let count = |pred: fn(u8) -> bool| {
            t.ridge_orbits
                .iter()
                .map(|l| l.iter().filter(|(_, m)| pred(*m)).count() as u16)
                .collect()
        };
        State {
            t,
            min_facets,
            status: vec![UNDECIDED; t.orbits.len()],
            ridge_deg: vec![0; t.ridges.len()],
            undec_single: count(|m| m == 1),
            undec_multi: count(|m| m >= 2),
            open: Vec::new(),
            open_pos: vec![NOT_OPEN; t.ridges.len()],
            in_facets: 0,
            undec_facets: t.orbits.iter().map(|o| o.size()).sum(),
            trail: Vec::new(),
            pending: Vec::new(),
            queue: Vec::new(),
        }
    }

    pub fn mark(&self) -> usize {
        self.trail.len()
    }

    fn set_open(&mut self, r: u32, open: bool) {
        let pos = self.open_pos[r as usize];
        if open && pos == NOT_OPEN {
            self.open_pos[r as usize] = self.open.len() as u32;
            self.open.push(r);
        } else if !open && pos != NOT_OPEN {
            let last = *self.open.last().unwrap();
            self.open.swap_remove(pos as usize);
            if last != r {
                self.open_pos[last as usize] = pos;
            }
            self.open_pos[r as usize] = NOT_OPEN;
        }
    }

    /// Applies one assignment and schedules its consequences. Returns
    /// false on an immediate contradiction; the state stays undoable.
    fn assign(&mut self, o: u32, value: u8) -> bool {
        let t = self.t;
        let orbit = &t.orbits[o as usize];
        self.status[o as usize] = value;
        self.trail.push(o);
        self.undec_facets -= orbit.size();
        let mut ok = true;
        for &(r, m) in &orbit.ridges {
            if m == 1 {
                self.undec_single[r as usize] -= 1;
            } else {
                self.undec_multi[r as usize] -= 1;
            }
            if value == IN {
                let deg = self.ridge_deg[r as usize] + m;
                self.ridge_deg[r as usize] = deg;
                ok &= deg <= 2;
                self.set_open(r, deg == 1);
            }
            self.queue.push(r);
        }
        if value == IN {
            self.in_facets += orbit.size();
            ok &= !orbit.self_conflict;
            for &c in &orbit.conflicts {
                match self.status[c as usize] {
                    IN => ok = false,
                    UNDECIDED => self.pending.push((c, OUT)),
                    _ => {}
                }
            }
        }
        ok
    }

    pub fn undo(&mut self, mark: usize) {
        self.pending.clear();
        self.queue.clear();
        while self.trail.len() > mark {
            let o = self.trail.pop().unwrap();
            let orbit = &self.t.orbits[o as usize];
            let was_in = self.status[o as usize] == IN;
            for &(r, m) in &orbit.ridges {
                if m == 1 {
                    self.undec_single[r as usize] += 1;
                } else {
                    self.undec_multi[r as usize] += 1;
                }
                if was_in {
                    let deg = self.ridge_deg[r as usize] - m;
                    self.ridge_deg[r as usize] = deg;
                    self.set_open(r, deg == 1);
                }
            }
            if was_in {
                self.in_facets -= orbit.size();
            }
            self.undec_facets += orbit.size();
            self.status[o as usize] = UNDECIDED;
        }
    }

    pub fn push(&mut self, o: u32, value: u8) {
        self.pending.push((o, value));
    }

    fn check_ridge(&mut self, r: u32) -> bool {
        let ri = r as usize;
        let deg = self.ridge_deg[ri];
        let (single, multi) = (self.undec_single[ri], self.undec_multi[ri]);
        // Only scan the cofacets when a rule fires.
        let (out_single, out_multi, in_single) = match deg {
            0 => (single == 1, false, false),
            1 => {
                if single == 0 {
                    return false;
                }
                (false, multi > 0, single == 1)
            }
            2 => (true, true, false),
            _ => return false,
        };
        if !(out_single || out_multi || in_single) || single + multi == 0 {
            return true;
        }
        for &(o, m) in &self.t.ridge_orbits[ri] {
            if self.status[o as usize] != UNDECIDED {
                continue;
            }
            if m == 1 {
                if out_single {
                    self.pending.push((o, OUT));
                } else if in_single {
                    self.pending.push((o, IN));
                }
            } else if out_multi {
                self.pending.push((o, OUT));
            }
        }
        true
    }

    /// Runs unit propagation to a fixpoint and applies the facet-count
    /// bound. On false the caller must `undo`.
    pub fn propagate(&mut self) -> bool {
        loop {
            if let Some((o, v)) = self.pending.pop() {
                let s = self.status[o as usize];
                if s == UNDECIDED {
                    if !self.assign(o, v) {
                        return false;
                    }
                } else if s != v {
                    return false;
                }
                continue;
            }
            if let Some(r) = self.queue.pop() {
                if !self.check_ridge(r) {
                    return false;
                }
                continue;
            }
            break;
        }
        self.in_facets + self.undec_facets >= self.min_facets
    }

    /// The degree-one ridge with the fewest candidate orbits, ties to the
    /// smallest ridge index. After propagation every undecided cofacet
    /// orbit of an open ridge puts a single facet there.
    pub fn pick_open_ridge(&self) -> Option<u32> {
        self.open
            .iter()
            .copied()
            .min_by_key(|&r| (self.undec_single[r as usize], r))
    }

    pub fn undecided_candidates(&self, r: u32) -> Vec<u32> {
        self.t.ridge_orbits[r as usize]
            .iter()
            .filter(|(o, _)| self.status[*o as usize] == UNDECIDED)
            .map(|&(o, _)| o)
            .collect()
    }

    pub fn undecided_orbits(&self) -> Vec<u32> {
        (0..self.status.len() as u32)
            .filter(|&o| self.status[o as usize] == UNDECIDED)
            .collect()
    }

    pub fn in_orbits(&self) -> Vec<u32> {
        (0..self.status.len() as u32)
            .filter(|&o| self.status[o as usize] == IN)
            .collect()
    }

    pub fn covered(&self) -> VertexSet {
        self.in_orbits()
            .iter()
            .flat_map(|&o| self.t.orbits[o as usize].facets.iter())
            .fold(VertexSet::EMPTY, |a, f| a.union(*f))
    }

    pub fn facets(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = self
            .in_orbits()
            .iter()
            .flat_map(|&o| self.t.orbits[o as usize].facets.iter().copied())
            .collect();
        out.sort_unstable();
        out
    }
}
