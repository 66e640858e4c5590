//! Slice words: a construction DSL for annular diagrams. The annulus is cut
//! open into a rectangle read top to bottom; the top and bottom boundaries
//! are identified (the seam). Strands occupy packed column positions and are
//! rewritten slice by slice. Compilation produces the crossing flow graph.
//!
//! Orientation labels are per strand: `down` strands run with the page and
//! cross the seam with intersection +1; `up` strands cross it with -1.

use std::collections::HashMap;

use crate::error::{Result, SkeinError};

use super::tangle::{FreeLoop, Tangle, Target, Xing};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SliceEvent {
    /// Strands at `pos`, `pos+1` cross and swap; `over_left` means the
    /// transversal entering at top `pos` is the over-strand.
    Cross { pos: usize, over_left: bool },
    /// Adjacent strands of opposite orientation join and vanish.
    Cap { pos: usize },
    /// A new adjacent pair of opposite orientations appears at `pos`,
    /// `pos+1`; the left one runs down iff `left_down`.
    Cup { pos: usize, left_down: bool },
    /// The column at `pos` ends here; its loose end carries `label`.
    BreakOut { pos: usize, label: String },
    /// A column appears at `pos` with the given orientation; its loose end
    /// carries `label`.
    BreakIn {
        pos: usize,
        down: bool,
        label: String,
    },
}

/// A slice word: top strand profile (true = down) and the event list.
/// Matching `BreakOut`/`BreakIn` labels are joined by invisible wires; the
/// reserved labels `A` (an unmatched flow start) and `B` (an unmatched flow
/// end) are the boundary points of a relative diagram.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SliceWord {
    pub top: Vec<bool>,
    pub events: Vec<SliceEvent>,
}

/// Flow-graph node used during compilation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Node {
    Out(usize, u8),
    In(usize, u8),
    /// Wrap junction or cup junction: flow enters `JIn(k)` and continues
    /// from `JOut(k)`.
    JIn(usize),
    JOut(usize),
    /// Labelled wire: flow enters `LIn(l)` and continues from `LOut(l)`.
    LIn(String),
    LOut(String),
}

/// Column state during simulation: orientation and the dangling end of the
/// partial edge currently running along it. For a down column that is the
/// flow source; for an up column, the flow destination.
#[derive(Clone, Debug)]
struct Col {
    down: bool,
    end: Node,
}

impl SliceWord {
    pub fn strand_count(&self) -> usize {
        self.top.len()
    }

    /// Compile to the crossing flow graph, validating orientations, the
    /// wrap profile, and label usage.
    pub fn compile(&self) -> Result<Tangle> {
        let mut cols: Vec<Col> = Vec::new();
        let mut junction = 0usize;
        let mut succ: HashMap<Node, (Node, i64)> = HashMap::new();
        let mut record = |from: Node, to: Node, seam: i64| -> Result<()> {
            if succ.insert(from.clone(), (to, seam)).is_some() {
                return Err(SkeinError::Diagram(format!(
                    "duplicate flow from {from:?}"
                )));
            }
            Ok(())
        };
        // top boundary: one wrap junction per column
        let top_junctions: Vec<usize> = (0..self.top.len())
            .map(|i| {
                let j = junction;
                junction += 1;
                let down = self.top[i];
                cols.push(Col {
                    down,
                    end: if down { Node::JOut(j) } else { Node::JIn(j) },
                });
                j
            })
            .collect();
        let mut xings: Vec<Option<Xing>> = Vec::new();
        // crossing out-edges are recorded with placeholder targets and fixed
        // at the end from `succ`
        for (ei, ev) in self.events.iter().enumerate() {
            let bad = |msg: &str| SkeinError::Diagram(format!("event {ei}: {msg}"));
            match ev {
                SliceEvent::Cross { pos, over_left } => {
                    let p = *pos;
                    if p + 1 >= cols.len() {
                        return Err(bad("crossing position out of range"));
                    }
                    let c = xings.len();
                    let (dl, dr) = (cols[p].down, cols[p + 1].down);
                    let dsign = |d: bool| if d { 1i8 } else { -1 };
                    let sign = dsign(dl) * dsign(dr) * if *over_left { 1 } else { -1 };
                    xings.push(Some(Xing {
                        sign,
                        over0: *over_left,
                        out: [(Target::End, 0), (Target::End, 0)],
                    }));
                    // strand 0: top-left <-> bottom-right transversal
                    if dl {
                        record(cols[p].end.clone(), Node::In(c, 0), 0)?;
                    } else {
                        record(Node::Out(c, 0), cols[p].end.clone(), 0)?;
                    }
                    // strand 1: top-right <-> bottom-left transversal
                    if dr {
                        record(cols[p + 1].end.clone(), Node::In(c, 1), 0)?;
                    } else {
                        record(Node::Out(c, 1), cols[p + 1].end.clone(), 0)?;
                    }
                    // below: left position carries strand 1, right strand 0
                    cols[p] = Col {
                        down: dr,
                        end: if dr {
                            Node::Out(c, 1)
                        } else {
                            Node::In(c, 1)
                        },
                    };
                    cols[p + 1] = Col {
                        down: dl,
                        end: if dl {
                            Node::Out(c, 0)
                        } else {
                            Node::In(c, 0)
                        },
                    };
                }
                SliceEvent::Cap { pos } => {
                    let p = *pos;
                    if p + 1 >= cols.len() {
                        return Err(bad("cap position out of range"));
                    }
                    if cols[p].down == cols[p + 1].down {
                        return Err(bad("cap requires opposite orientations"));
                    }
                    let (down_end, up_end) = if cols[p].down {
                        (cols[p].end.clone(), cols[p + 1].end.clone())
                    } else {
                        (cols[p + 1].end.clone(), cols[p].end.clone())
                    };
                    // flow: down the one leg, U-turn, up the other
                    record(down_end, up_end, 0)?;
                    cols.drain(p..p + 2);
                }
                SliceEvent::Cup { pos, left_down } => {
                    let p = *pos;
                    if p > cols.len() {
                        return Err(bad("cup position out of range"));
                    }
                    let j = junction;
                    junction += 1;
                    let left = Col {
                        down: *left_down,
                        end: if *left_down {
                            Node::JOut(j)
                        } else {
                            Node::JIn(j)
                        },
                    };
                    let right = Col {
                        down: !*left_down,
                        end: if !*left_down {
                            Node::JOut(j)
                        } else {
                            Node::JIn(j)
                        },
                    };
                    cols.insert(p, right);
                    cols.insert(p, left);
                }
                SliceEvent::BreakOut { pos, label } => {
                    let p = *pos;
                    if p >= cols.len() {
                        return Err(bad("break position out of range"));
                    }
                    let col = cols.remove(p);
                    if col.down {
                        record(col.end, Node::LIn(label.clone()), 0)?;
                    } else {
                        record(Node::LOut(label.clone()), col.end, 0)?;
                    }
                }
                SliceEvent::BreakIn { pos, down, label } => {
                    let p = *pos;
                    if p > cols.len() {
                        return Err(bad("break position out of range"));
                    }
                    cols.insert(
                        p,
                        Col {
                            down: *down,
                            end: if *down {
                                Node::LOut(label.clone())
                            } else {
                                Node::LIn(label.clone())
                            },
                        },
                    );
                }
            }
        }
        // bottom boundary: wrap back to the top, adding the seam crossing
        if cols.len() != self.top.len() {
            return Err(SkeinError::Diagram(format!(
                "profile mismatch at the seam: {} columns at top, {} at bottom",
                self.top.len(),
                cols.len()
            )));
        }
        for (i, col) in cols.iter().enumerate() {
            if col.down != self.top[i] {
                return Err(SkeinError::Diagram(format!(
                    "orientation mismatch at the seam in column {i}"
                )));
            }
            let j = top_junctions[i];
            if col.down {
                record(col.end.clone(), Node::JIn(j), 1)?;
            } else {
                record(Node::JOut(j), col.end.clone(), -1)?;
            }
        }
        // resolve edges by splicing junction and label wires
        let lout_of = |n: &Node| -> Option<Node> {
            match n {
                Node::JIn(j) => Some(Node::JOut(*j)),
                Node::LIn(l) => {
                    if l == "B" {
                        None
                    } else {
                        Some(Node::LOut(l.clone()))
                    }
                }
                _ => None,
            }
        };
        let mut used: std::collections::HashSet<Node> = std::collections::HashSet::new();
        let splice_bound = succ.len() + 2;
        let mut resolve = |start: &Node| -> Result<(Target, i64)> {
            let mut cur = start.clone();
            let mut seam = 0i64;
            for _ in 0..splice_bound {
                let (next, ds) = succ
                    .get(&cur)
                    .ok_or_else(|| SkeinError::Diagram(format!("dangling flow at {cur:?}")))?
                    .clone();
                used.insert(cur.clone());
                seam += ds;
                match &next {
                    Node::In(c, s) => return Ok((Target::In(*c, *s), seam)),
                    Node::LIn(l) if l == "B" => return Ok((Target::End, seam)),
                    other => match lout_of(other) {
                        Some(cont) => cur = cont,
                        None => {
                            return Err(SkeinError::Diagram(format!(
                                "flow ran into {other:?}"
                            )))
                        }
                    },
                }
            }
            Err(SkeinError::Diagram("flow does not terminate".into()))
        };
        let mut arc = None;
        if succ.contains_key(&Node::LOut("B".into()))
            || succ.values().any(|(n, _)| matches!(n, Node::LIn(l) if l == "A"))
        {
            return Err(SkeinError::Diagram(
                "A must be a flow start and B a flow end".into(),
            ));
        }
        let has_a = succ.contains_key(&Node::LOut("A".into()));
        let has_b = succ
            .values()
            .any(|(n, _)| matches!(n, Node::LIn(l) if l == "B"));
        if has_a != has_b {
            return Err(SkeinError::Diagram(
                "endpoints A and B must both be present or both absent".into(),
            ));
        }
        if has_a {
            arc = Some(resolve(&Node::LOut("A".into()))?);
        }
        for c in 0..xings.len() {
            for s in 0..2u8 {
                let t = resolve(&Node::Out(c, s))?;
                xings[c].as_mut().unwrap().out[s as usize] = t;
            }
        }
        // leftover junction cycles are crossing-free loops
        let mut loops: Vec<FreeLoop> = Vec::new();
        let sources: Vec<Node> = succ.keys().cloned().collect();
        for n in sources {
            let is_junction_source = matches!(n, Node::JOut(_) | Node::LOut(_));
            if !is_junction_source || used.contains(&n) {
                continue;
            }
            // walk the cycle
            let mut cur = n.clone();
            let mut seam = 0i64;
            loop {
                let (next, ds) = succ
                    .get(&cur)
                    .ok_or_else(|| SkeinError::Diagram(format!("dangling flow at {cur:?}")))?
                    .clone();
                used.insert(cur.clone());
                seam += ds;
                let cont = lout_of(&next).ok_or_else(|| {
                    SkeinError::Diagram(format!("unexpected node {next:?} in a free loop"))
                })?;
                if cont == n {
                    break;
                }
                cur = cont;
            }
            loops.push(FreeLoop {
                winding: seam,
                curls: 0,
            });
        }
        Ok(Tangle { xings, arc, loops })
    }
}

/// Emit the three-event block for a single curl on the strand at `pos`;
/// `positive` chooses the curl sign. The strand keeps its position.
pub fn kink_events(events: &mut Vec<SliceEvent>, pos: usize, down: bool, positive: bool) {
    events.push(SliceEvent::Cup {
        pos: pos + 1,
        left_down: down,
    });
    events.push(SliceEvent::Cross {
        pos,
        over_left: positive,
    });
    events.push(SliceEvent::Cap { pos: pos + 1 });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_word_compiles_to_empty_diagram() {
        let t = SliceWord::default().compile().unwrap();
        assert_eq!(t.crossing_count(), 0);
        assert!(t.loops.is_empty());
        assert!(t.arc.is_none());
    }

    #[test]
    fn single_strand_closure_is_one_loop() {
        let w = SliceWord {
            top: vec![true],
            events: vec![],
        };
        let t = w.compile().unwrap();
        assert_eq!(t.loops.len(), 1);
        assert_eq!(t.loops[0].winding, 1);
        let w = SliceWord {
            top: vec![false],
            events: vec![],
        };
        let t = w.compile().unwrap();
        assert_eq!(t.loops[0].winding, -1);
    }

    #[test]
    fn one_crossing_closure() {
        // closure of sigma_1 on two down strands: one component, winding 2,
        // one positive crossing
        let w = SliceWord {
            top: vec![true, true],
            events: vec![SliceEvent::Cross {
                pos: 0,
                over_left: true,
            }],
        };
        let t = w.compile().unwrap();
        assert_eq!(t.crossing_count(), 1);
        assert_eq!(t.writhe(), 1);
        assert!(t.loops.is_empty());
        let x = t.xings[0].as_ref().unwrap();
        // both strands wrap back into the crossing; total seam 2
        assert_eq!(x.out[0].1 + x.out[1].1, 2);
    }

    #[test]
    fn negative_crossing_up_strands() {
        // closure of sigma_1^{-1} with counterclockwise strands: writhe -1
        let w = SliceWord {
            top: vec![false, false],
            events: vec![SliceEvent::Cross {
                pos: 0,
                over_left: false,
            }],
        };
        let t = w.compile().unwrap();
        assert_eq!(t.writhe(), -1);
    }

    #[test]
    fn cup_cap_circle() {
        // a cup immediately capped: a null-homotopic circle
        let w = SliceWord {
            top: vec![],
            events: vec![
                SliceEvent::Cup {
                    pos: 0,
                    left_down: true,
                },
                SliceEvent::Cap { pos: 0 },
            ],
        };
        let t = w.compile().unwrap();
        assert_eq!(t.loops.len(), 1);
        assert_eq!(t.loops[0].winding, 0);
    }

    #[test]
    fn break_pair_makes_arc() {
        // trivial short arc: born at A, dies at B, no winding
        let w = SliceWord {
            top: vec![],
            events: vec![
                SliceEvent::BreakIn {
                    pos: 0,
                    down: true,
                    label: "A".into(),
                },
                SliceEvent::BreakOut {
                    pos: 0,
                    label: "B".into(),
                },
            ],
        };
        let t = w.compile().unwrap();
        assert_eq!(t.arc, Some((Target::End, 0)));
    }

    #[test]
    fn arc_through_seam() {
        // one full winding: break the single wrap column
        let w = SliceWord {
            top: vec![true],
            events: vec![
                SliceEvent::BreakOut {
                    pos: 0,
                    label: "B".into(),
                },
                SliceEvent::BreakIn {
                    pos: 0,
                    down: true,
                    label: "A".into(),
                },
            ],
        };
        let t = w.compile().unwrap();
        assert_eq!(t.arc, Some((Target::End, 1)));
    }

    #[test]
    fn seam_profile_mismatch_rejected() {
        let w = SliceWord {
            top: vec![true],
            events: vec![SliceEvent::BreakOut {
                pos: 0,
                label: "B".into(),
            }],
        };
        assert!(w.compile().is_err());
        let w = SliceWord {
            top: vec![true, false],
            events: vec![SliceEvent::Cap { pos: 0 }],
        };
        assert!(w.compile().is_err());
    }

    #[test]
    fn cap_requires_opposite_orientations() {
        let w = SliceWord {
            top: vec![true, true],
            events: vec![SliceEvent::Cap { pos: 0 }],
        };
        assert!(w.compile().is_err());
    }

    #[test]
    fn kink_block_compiles_to_single_curl() {
        let mut events = Vec::new();
        kink_events(&mut events, 0, true, true);
        let w = SliceWord {
            top: vec![true],
            events,
        };
        let t = w.compile().unwrap();
        assert_eq!(t.crossing_count(), 1);
        assert_eq!(t.writhe(), 1);
        // the kink must be a monogon: one out-port feeds the other strand
        // of the same crossing with no seam
        let x = t.xings[0].as_ref().unwrap();
        let monogon = (0..2).any(|s| x.out[s].0 == Target::In(0, 1 - s as u8) && x.out[s].1 == 0);
        assert!(monogon);
        // negative kink on an up strand still has its declared sign
        let mut events = Vec::new();
        kink_events(&mut events, 0, false, false);
        let w = SliceWord {
            top: vec![false],
            events,
        };
        let t = w.compile().unwrap();
        assert_eq!(t.writhe(), -1);
    }

    #[test]
    fn reverse_negates_seams_keeps_signs() {
        let w = SliceWord {
            top: vec![true, true],
            events: vec![SliceEvent::Cross {
                pos: 0,
                over_left: true,
            }],
        };
        let t = w.compile().unwrap();
        let r = t.reverse().unwrap();
        assert_eq!(r.writhe(), t.writhe());
        let x = r.xings[0].as_ref().unwrap();
        assert_eq!(x.out[0].1 + x.out[1].1, -2);
        assert_eq!(r.reverse().unwrap(), t);
    }
}
