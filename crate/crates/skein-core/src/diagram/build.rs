//! Slice-word builders: braid closures, the standard relative templates for
//! the basis keys, partial closures of Hecke braids, and the capping and
//! wiring surgeries on them.

use crate::error::{Result, SkeinError};
use crate::hecke::BraidWord;

use super::slice::{kink_events, SliceEvent, SliceWord};

/// Orientation of a block of strands.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Orient {
    Clockwise,
    Counterclockwise,
}

impl Orient {
    pub fn down(self) -> bool {
        self == Orient::Clockwise
    }
}

/// Append braid letters as crossing events on the column block starting at
/// `base` (0-based). The letter sign fixes the geometric over-strand.
fn push_word(events: &mut Vec<SliceEvent>, base: usize, letters: &[i32]) {
    for &l in letters {
        events.push(SliceEvent::Cross {
            pos: base + l.unsigned_abs() as usize - 1,
            over_left: l > 0,
        });
    }
}

/// The standard coxeter word whose closure is the single curve `A_n`.
fn coxeter_letters(n: usize, positive: bool) -> Vec<i32> {
    (1..n as i32)
        .rev()
        .map(|i| if positive { i } else { -i })
        .collect()
}

/// Annular closure of a braid word; all strands share the orientation.
pub fn braid_closure(word: &BraidWord, orient: Orient) -> SliceWord {
    let mut events = Vec::new();
    push_word(&mut events, 0, &word.letters);
    SliceWord {
        top: vec![orient.down(); word.n],
        events,
    }
}

/// A relative diagram template under construction: the slice word plus the
/// bookkeeping needed by the capping and wiring surgeries.
#[derive(Clone, Debug)]
pub struct RelTemplate {
    pub sw: SliceWord,
    /// Index in `events` where cut-band insertions (detour, kinks, wiring
    /// columns) go; the arc column is rightmost and alive there.
    insert_at: usize,
    /// Column position of the arc at the insertion band.
    arc_pos: usize,
    /// Arc orientation at the cut.
    arc_down: bool,
}

/// Arc drawing style for negative windings.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ArcStyle {
    /// Standard generators: negative arcs use negative crossings and carry
    /// the extra negative curl that normalizes the straight capping.
    Standard,
    /// The alternative family: the outside arc winds negatively through
    /// positive crossings, no curl.
    Outside,
}

/// Build the standard template for `blob * A'(arc)`: concentric closed
/// curves for the blob monomial (innermost first), then the arc block with
/// its wrap cut open at the boundary.
pub fn relative_template(blob: &[i64], arc: i64, style: ArcStyle) -> Result<RelTemplate> {
    if blob.iter().any(|&w| w == 0) {
        return Err(SkeinError::Diagram("blob index 0".into()));
    }
    let mut top: Vec<bool> = Vec::new();
    let mut events: Vec<SliceEvent> = Vec::new();
    let mut blob_sorted = blob.to_vec();
    blob_sorted.sort();
    for &w in &blob_sorted {
        let base = top.len();
        let k = w.unsigned_abs() as usize;
        top.extend(std::iter::repeat(w > 0).take(k));
        push_word(&mut events, base, &coxeter_letters(k, w > 0));
    }
    let base = top.len();
    let k = arc.unsigned_abs() as usize;
    if arc > 0 {
        top.extend(std::iter::repeat(true).take(k));
        push_word(&mut events, base, &coxeter_letters(k, true));
        let last = top.len() - 1;
        let insert_at = events.len();
        events.push(SliceEvent::BreakOut {
            pos: last,
            label: "B".into(),
        });
        events.push(SliceEvent::BreakIn {
            pos: last,
            down: true,
            label: "A".into(),
        });
        Ok(RelTemplate {
            sw: SliceWord { top, events },
            insert_at,
            arc_pos: last,
            arc_down: true,
        })
    } else if arc < 0 {
        top.extend(std::iter::repeat(false).take(k));
        let positive_crossings = style == ArcStyle::Outside;
        push_word(&mut events, base, &coxeter_letters(k, positive_crossings));
        let last = top.len() - 1;
        events.push(SliceEvent::BreakOut {
            pos: last,
            label: "A".into(),
        });
        events.push(SliceEvent::BreakIn {
            pos: last,
            down: false,
            label: "B".into(),
        });
        let insert_at = events.len();
        if style == ArcStyle::Standard {
            kink_events(&mut events, last, false, false);
        }
        Ok(RelTemplate {
            sw: SliceWord { top, events },
            insert_at,
            arc_pos: last,
            arc_down: false,
        })
    } else {
        // trivial short arc next to the boundary
        let pos = top.len();
        events.push(SliceEvent::BreakIn {
            pos,
            down: true,
            label: "A".into(),
        });
        let insert_at = events.len();
        events.push(SliceEvent::BreakOut {
            pos,
            label: "B".into(),
        });
        Ok(RelTemplate {
            sw: SliceWord { top, events },
            insert_at,
            arc_pos: pos,
            arc_down: true,
        })
    }
}

/// Partial closure of a braid: all strands wrap except the last, which runs
/// to the boundary points. Optionally nested outside closed blob blocks.
pub fn partial_closure(
    word: &BraidWord,
    orient: Orient,
    blob_words: &[(BraidWord, Orient)],
) -> RelTemplate {
    let mut top: Vec<bool> = Vec::new();
    let mut events: Vec<SliceEvent> = Vec::new();
    for (w, o) in blob_words {
        let base = top.len();
        top.extend(std::iter::repeat(o.down()).take(w.n));
        push_word(&mut events, base, &w.letters);
    }
    let base = top.len();
    top.extend(std::iter::repeat(orient.down()).take(word.n));
    push_word(&mut events, base, &word.letters);
    let last = top.len() - 1;
    let insert_at;
    if orient.down() {
        insert_at = events.len();
        events.push(SliceEvent::BreakOut {
            pos: last,
            label: "B".into(),
        });
        events.push(SliceEvent::BreakIn {
            pos: last,
            down: true,
            label: "A".into(),
        });
    } else {
        events.push(SliceEvent::BreakOut {
            pos: last,
            label: "A".into(),
        });
        events.push(SliceEvent::BreakIn {
            pos: last,
            down: false,
            label: "B".into(),
        });
        insert_at = events.len();
    }
    RelTemplate {
        sw: SliceWord { top, events },
        insert_at,
        arc_pos: last,
        arc_down: orient.down(),
    }
}

fn relabel(sw: &mut SliceWord, from: &str, to: &str) {
    for ev in sw.events.iter_mut() {
        match ev {
            SliceEvent::BreakOut { label, .. } | SliceEvent::BreakIn { label, .. } => {
                if label == from {
                    *label = to.to_string();
                }
            }
            _ => {}
        }
    }
}

impl RelTemplate {
    pub fn sliceword(&self) -> &SliceWord {
        &self.sw
    }

    /// Cap with the boundary-parallel arc: the straight continuation,
    /// realized by joining B to A with an invisible wire.
    pub fn cap_short(&self) -> SliceWord {
        let mut sw = self.sw.clone();
        relabel(&mut sw, "A", "__cap");
        relabel(&mut sw, "B", "__cap");
        sw
    }

    /// Cap around the far side of the attaching curve: before rejoining, the
    /// strand dives across every column (under on the way in, over on the
    /// way out) and picks up two positive curls.
    pub fn cap_long(&self) -> SliceWord {
        let mut sw = self.sw.clone();
        let last = self.arc_pos;
        let mut ins: Vec<SliceEvent> = Vec::new();
        for p in (0..last).rev() {
            ins.push(SliceEvent::Cross {
                pos: p,
                over_left: true,
            });
        }
        for p in 0..last {
            ins.push(SliceEvent::Cross {
                pos: p,
                over_left: true,
            });
        }
        kink_events(&mut ins, last, self.arc_down, true);
        kink_events(&mut ins, last, self.arc_down, true);
        sw.events.splice(self.insert_at..self.insert_at, ins);
        relabel(&mut sw, "A", "__cap");
        relabel(&mut sw, "B", "__cap");
        sw
    }

    /// Extend the arc around `m` extra windings at the outermost radius,
    /// then close up.
    pub fn wire(&self, m: usize) -> Result<SliceWord> {
        if m == 0 {
            return Err(SkeinError::Domain("wiring needs m >= 1".into()));
        }
        let mut sw = self.sw.clone();
        let last = self.arc_pos;
        let mut ins: Vec<SliceEvent> = Vec::new();
        // all wind columns break in one band so the chain wires stay clear
        for _ in 0..m {
            ins.push(SliceEvent::BreakOut {
                pos: last + 1,
                label: String::new(),
            });
        }
        for k in 0..m {
            ins.push(SliceEvent::BreakIn {
                pos: last + 1 + k,
                down: true,
                label: String::new(),
            });
        }
        sw.events.splice(self.insert_at..self.insert_at, ins);
        // chain: B -> w1 -> ... -> wm -> A
        relabel(&mut sw, "B", "__w0");
        relabel(&mut sw, "A", &format!("__w{m}"));
        let mut outs = 0usize;
        let mut ins_seen = 0usize;
        for ev in sw.events.iter_mut() {
            match ev {
                SliceEvent::BreakOut { label, .. } if label.is_empty() => {
                    outs += 1;
                    *label = format!("__w{outs}");
                }
                SliceEvent::BreakIn { label, .. } if label.is_empty() => {
                    *label = format!("__w{ins_seen}");
                    ins_seen += 1;
                }
                _ => {}
            }
        }
        sw.top.extend(std::iter::repeat(true).take(m));
        Ok(sw)
    }
}

/// Full closure of a braid with the last strand encircling the others once
/// on its way around: under-in/over-out for `positive`, the mirror loop
/// otherwise.
pub fn closure_with_loop(word: &BraidWord, orient: Orient, positive: bool) -> SliceWord {
    let mut events = Vec::new();
    push_word(&mut events, 0, &word.letters);
    let last = word.n - 1;
    for p in (0..last).rev() {
        events.push(SliceEvent::Cross {
            pos: p,
            over_left: positive,
        });
    }
    for p in 0..last {
        events.push(SliceEvent::Cross {
            pos: p,
            over_left: positive,
        });
    }
    SliceWord {
        top: vec![orient.down(); word.n],
        events,
    }
}
