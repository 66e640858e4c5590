//! Compiled annular diagrams: a 4-valent flow graph with crossings, oriented
//! edges carrying seam counts, crossing-free loops, and an optional arc
//! between two boundary points.

use crate::error::{Result, SkeinError};

/// Where flow goes after leaving an out-port.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Target {
    /// In-port: crossing id, strand 0/1.
    In(usize, u8),
    /// The output boundary point B.
    End,
}

/// One crossing. Strand 0 and strand 1 are the two transversals; each enters
/// at its in-port and leaves at its out-port. `over0` says strand 0 is the
/// over-strand; `sign` is the usual orientation sign.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Xing {
    pub sign: i8,
    pub over0: bool,
    /// Outflow of strand 0 / strand 1: target and the seam count of that edge.
    pub out: [(Target, i64); 2],
}

/// Crossing-free closed component.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FreeLoop {
    pub winding: i64,
    pub curls: i64,
}

/// A compiled diagram. Crossing slots may be vacated during evaluation.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Tangle {
    pub xings: Vec<Option<Xing>>,
    /// First edge of the arc from A: target and seam. Present iff relative.
    pub arc: Option<(Target, i64)>,
    pub loops: Vec<FreeLoop>,
}

impl Tangle {
    pub fn is_relative(&self) -> bool {
        self.arc.is_some()
    }

    pub fn live_crossings(&self) -> impl Iterator<Item = (usize, &Xing)> {
        self.xings
            .iter()
            .enumerate()
            .filter_map(|(i, x)| x.as_ref().map(|x| (i, x)))
    }

    pub fn crossing_count(&self) -> usize {
        self.xings.iter().filter(|x| x.is_some()).count()
    }

    pub fn writhe(&self) -> i64 {
        self.live_crossings().map(|(_, x)| x.sign as i64).sum()
    }

    /// Reverse all string orientations: flow reverses, seam counts negate,
    /// crossing signs and over-strands are preserved.
    pub fn reverse(&self) -> Result<Tangle> {
        let mut out = Tangle {
            xings: self
                .xings
                .iter()
                .map(|x| {
                    x.as_ref().map(|x| Xing {
                        sign: x.sign,
                        over0: x.over0,
                        out: [(Target::End, 0), (Target::End, 0)],
                    })
                })
                .collect(),
            arc: None,
            loops: self
                .loops
                .iter()
                .map(|l| FreeLoop {
                    winding: -l.winding,
                    curls: l.curls,
                })
                .collect(),
        };
        // reversed edge: old Out(c,s) -> In(c',s') becomes Out(c',s') -> In(c,s)
        let mut new_arc_first: Option<(Target, i64)> = None;
        let mut set = |from: Option<(usize, u8)>, to: Target, seam: i64| {
            let rev_target = match from {
                Some((c, s)) => Target::In(c, s),
                None => Target::End, // old arc start becomes the new end
            };
            match to {
                Target::In(c, s) => {
                    out.xings[c].as_mut().unwrap().out[s as usize] = (rev_target, -seam);
                }
                Target::End => {
                    new_arc_first = Some((rev_target, -seam));
                }
            }
        };
        for (c, x) in self.live_crossings() {
            for s in 0..2u8 {
                let (t, seam) = x.out[s as usize];
                set(Some((c, s)), t, seam);
            }
        }
        if let Some((t, seam)) = self.arc {
            set(None, t, seam);
        }
        out.arc = new_arc_first;
        if self.arc.is_some() && out.arc.is_none() {
            return Err(SkeinError::Diagram("arc reversal lost an endpoint".into()));
        }
        Ok(out)
    }

    /// Disjoint union, the second diagram placed radially inside the first.
    /// Both must be closed.
    pub fn nest(&self, inner: &Tangle) -> Result<Tangle> {
        if self.arc.is_some() || inner.arc.is_some() {
            return Err(SkeinError::Diagram(
                "cannot nest diagrams with boundary points".into(),
            ));
        }
        let offset = self.xings.len();
        let shift = |t: Target| match t {
            Target::In(c, s) => Target::In(c + offset, s),
            Target::End => Target::End,
        };
        let mut xings = self.xings.clone();
        xings.extend(inner.xings.iter().map(|x| {
            x.as_ref().map(|x| Xing {
                sign: x.sign,
                over0: x.over0,
                out: [
                    (shift(x.out[0].0), x.out[0].1),
                    (shift(x.out[1].0), x.out[1].1),
                ],
            })
        }));
        let mut loops = self.loops.clone();
        loops.extend_from_slice(&inner.loops);
        Ok(Tangle {
            xings,
            arc: None,
            loops,
        })
    }

    /// Follow flow through vacated slot `c` with the given in-to-out strand
    /// rewiring (`swap` = oriented smoothing, otherwise pass-through).
    fn follow_through(&self, c: usize, swap: bool, mut t: (Target, i64)) -> Option<(Target, i64)> {
        for _ in 0..8 {
            match t.0 {
                Target::In(cc, s) if cc == c => {
                    let s_out = if swap { 1 - s } else { s };
                    let (nt, seam) = self.xings[c].as_ref().unwrap().out[s_out as usize];
                    t = (nt, t.1 + seam);
                }
                _ => return Some(t),
            }
        }
        None // pure internal cycle
    }

    /// Remove crossing `c`, rewiring its strands: `swap = true` is the
    /// oriented smoothing, `swap = false` lets both strands pass through
    /// (used when a curl is erased). New crossing-free components become
    /// free loops with the given curl count.
    pub fn delete_crossing(&self, c: usize, swap: bool, loop_curls: i64) -> Tangle {
        let mut out = self.clone();
        out.xings[c] = None;
        for cc in 0..self.xings.len() {
            if cc == c || self.xings[cc].is_none() {
                continue;
            }
            for s in 0..2usize {
                let t = self.xings[cc].as_ref().unwrap().out[s];
                if let Some(rt) = self.follow_through(c, swap, t) {
                    out.xings[cc].as_mut().unwrap().out[s] = rt;
                }
            }
        }
        if let Some(a) = self.arc {
            out.arc = self.follow_through(c, swap, a);
            debug_assert!(out.arc.is_some(), "arc cannot end in a deleted cycle");
        }
        // internal cycles through the deleted crossing become free loops
        let x = self.xings[c].as_ref().unwrap();
        let mut consumed = [false; 2];
        for start in 0..2usize {
            if consumed[start] {
                continue;
            }
            let (mut t, mut seam) = x.out[start];
            let mut cycle_ports = vec![start];
            let closed = loop {
                match t {
                    Target::In(cc, s) if cc == c => {
                        let s_out = if swap { 1 - s as usize } else { s as usize };
                        if cycle_ports.contains(&s_out) {
                            break s_out == start;
                        }
                        cycle_ports.push(s_out);
                        let (nt, ns) = x.out[s_out];
                        t = nt;
                        seam += ns;
                    }
                    _ => break false,
                }
            };
            if closed {
                for p in &cycle_ports {
                    consumed[*p] = true;
                }
                out.loops.push(FreeLoop {
                    winding: seam,
                    curls: loop_curls,
                });
            }
        }
        out
    }

    /// Flip the over-strand of a crossing; the sign flips with it.
    pub fn switch_crossing(&self, c: usize) -> Tangle {
        let mut out = self.clone();
        let x = out.xings[c].as_mut().unwrap();
        x.over0 = !x.over0;
        x.sign = -x.sign;
        out
    }

    /// A stable serialization used as a memo key: live crossings in slot
    /// order with their full data, then arc and loops.
    pub fn memo_key(&self) -> Vec<i64> {
        let mut key = Vec::with_capacity(self.xings.len() * 8 + 8);
        let tgt = |t: Target| -> (i64, i64) {
            match t {
                Target::In(c, s) => (c as i64, s as i64),
                Target::End => (-1, -1),
            }
        };
        for (c, x) in self.live_crossings() {
            key.push(c as i64);
            key.push(x.sign as i64);
            key.push(x.over0 as i64);
            for s in 0..2 {
                let (t, seam) = x.out[s];
                let (a, b) = tgt(t);
                key.push(a);
                key.push(b);
                key.push(seam);
            }
        }
        key.push(i64::MIN + 1); // section separator
        match self.arc {
            Some((t, seam)) => {
                let (a, b) = tgt(t);
                key.push(1);
                key.push(a);
                key.push(b);
                key.push(seam);
            }
            None => key.push(0),
        }
        let mut loops: Vec<(i64, i64)> = self.loops.iter().map(|l| (l.winding, l.curls)).collect();
        loops.sort();
        for (w, k) in loops {
            key.push(w);
            key.push(k);
        }
        key
    }
}
