//! Textual diagram formats. The slice-word form mirrors the construction
//! DSL; the compiled-graph form lists crossings, edges with seam counts, and
//! loops. Both round-trip through their printers and parsers.

use std::fmt::Write as _;

use crate::error::{Result, SkeinError};

use super::slice::{SliceEvent, SliceWord};
use super::tangle::{FreeLoop, Tangle, Target, Xing};

/// Print the slice-word form.
pub fn sliceword_to_text(sw: &SliceWord) -> String {
    let mut out = String::new();
    writeln!(out, "strands: {}", sw.top.len()).unwrap();
    let orient: Vec<&str> = sw.top.iter().map(|d| if *d { "v" } else { "^" }).collect();
    writeln!(out, "orient: {}", orient.join(" ")).unwrap();
    writeln!(out, "slices:").unwrap();
    for ev in &sw.events {
        let line = match ev {
            SliceEvent::Cross { pos, over_left } => {
                format!("  x{} {}", if *over_left { "+" } else { "-" }, pos + 1)
            }
            SliceEvent::Cap { pos } => format!("  cap {}", pos + 1),
            SliceEvent::Cup { pos, left_down } => {
                format!("  cup {} {}", pos + 1, if *left_down { "v" } else { "^" })
            }
            SliceEvent::BreakOut { pos, label } => format!("  out {} {}", pos + 1, label),
            SliceEvent::BreakIn { pos, down, label } => {
                format!("  in {} {} {}", pos + 1, if *down { "v" } else { "^" }, label)
            }
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// Parse the slice-word form.
pub fn sliceword_from_text(input: &str) -> Result<SliceWord> {
    let mut strands: Option<usize> = None;
    let mut orient: Option<Vec<bool>> = None;
    let mut events: Vec<SliceEvent> = Vec::new();
    let mut in_slices = false;
    let err = |ln: usize, msg: &str| SkeinError::Parse {
        line: ln + 1,
        col: 1,
        msg: msg.to_string(),
    };
    let parse_dir = |tok: &str, ln: usize| -> Result<bool> {
        match tok {
            "v" => Ok(true),
            "^" => Ok(false),
            _ => Err(err(ln, "expected v or ^")),
        }
    };
    for (ln, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("strands:") {
            strands = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| err(ln, "bad strand count"))?,
            );
            in_slices = false;
        } else if let Some(rest) = line.strip_prefix("orient:") {
            let dirs = rest
                .split_whitespace()
                .map(|t| parse_dir(t, ln))
                .collect::<Result<Vec<_>>>()?;
            orient = Some(dirs);
            in_slices = false;
        } else if line == "slices:" {
            in_slices = true;
        } else if in_slices {
            let toks: Vec<&str> = line.split_whitespace().collect();
            let pos = |i: usize| -> Result<usize> {
                let p: usize = toks
                    .get(i)
                    .ok_or_else(|| err(ln, "missing position"))?
                    .parse()
                    .map_err(|_| err(ln, "bad position"))?;
                if p == 0 {
                    return Err(err(ln, "positions are 1-based"));
                }
                Ok(p - 1)
            };
            match toks[0] {
                "x+" => events.push(SliceEvent::Cross {
                    pos: pos(1)?,
                    over_left: true,
                }),
                "x-" => events.push(SliceEvent::Cross {
                    pos: pos(1)?,
                    over_left: false,
                }),
                "cap" => events.push(SliceEvent::Cap { pos: pos(1)? }),
                "cup" => events.push(SliceEvent::Cup {
                    pos: pos(1)?,
                    left_down: parse_dir(toks.get(2).ok_or_else(|| err(ln, "missing dir"))?, ln)?,
                }),
                "out" => events.push(SliceEvent::BreakOut {
                    pos: pos(1)?,
                    label: toks
                        .get(2)
                        .ok_or_else(|| err(ln, "missing label"))?
                        .to_string(),
                }),
                "in" => events.push(SliceEvent::BreakIn {
                    pos: pos(1)?,
                    down: parse_dir(toks.get(2).ok_or_else(|| err(ln, "missing dir"))?, ln)?,
                    label: toks
                        .get(3)
                        .ok_or_else(|| err(ln, "missing label"))?
                        .to_string(),
                }),
                other => return Err(err(ln, &format!("unknown slice event {other:?}"))),
            }
        } else {
            return Err(err(ln, "unexpected line outside a section"));
        }
    }
    let n = strands.ok_or_else(|| err(0, "missing strands section"))?;
    let top = orient.unwrap_or_else(|| vec![true; n]);
    if top.len() != n {
        return Err(err(0, "orient length disagrees with strand count"));
    }
    Ok(SliceWord { top, events })
}

fn target_str(t: Target) -> String {
    match t {
        Target::In(c, s) => format!("{}{}", c, if s == 0 { 'a' } else { 'b' }),
        Target::End => "B".into(),
    }
}

fn parse_target(tok: &str) -> Result<Target> {
    if tok == "B" {
        return Ok(Target::End);
    }
    let (num, strand) = tok.split_at(tok.len() - 1);
    let c: usize = num.parse().map_err(|_| SkeinError::Parse {
        line: 1,
        col: 1,
        msg: format!("bad port {tok:?}"),
    })?;
    let s = match strand {
        "a" => 0u8,
        "b" => 1,
        _ => {
            return Err(SkeinError::Parse {
                line: 1,
                col: 1,
                msg: format!("bad strand in {tok:?}"),
            })
        }
    };
    Ok(Target::In(c, s))
}

/// Print the compiled-graph form. Crossing slots are renumbered densely.
pub fn tangle_to_text(t: &Tangle) -> String {
    let mut out = String::new();
    let live: Vec<usize> = t.live_crossings().map(|(c, _)| c).collect();
    let dense: std::collections::HashMap<usize, usize> =
        live.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    writeln!(out, "crossings: {}", live.len()).unwrap();
    let rename = |tg: Target| match tg {
        Target::In(c, s) => Target::In(dense[&c], s),
        Target::End => Target::End,
    };
    for &c in &live {
        let x = t.xings[c].as_ref().unwrap();
        writeln!(
            out,
            "c {} {} {}",
            dense[&c],
            if x.sign > 0 { "+" } else { "-" },
            if x.over0 { "a" } else { "b" }
        )
        .unwrap();
    }
    for &c in &live {
        let x = t.xings[c].as_ref().unwrap();
        for s in 0..2usize {
            let (tg, seam) = x.out[s];
            writeln!(
                out,
                "e {}{} {} {}",
                dense[&c],
                if s == 0 { 'a' } else { 'b' },
                target_str(rename(tg)),
                seam
            )
            .unwrap();
        }
    }
    if let Some((tg, seam)) = t.arc {
        writeln!(out, "arc {} {}", target_str(rename(tg)), seam).unwrap();
    }
    for l in &t.loops {
        writeln!(out, "loop {} {}", l.winding, l.curls).unwrap();
    }
    out
}

/// Parse the compiled-graph form.
pub fn tangle_from_text(input: &str) -> Result<Tangle> {
    let mut t = Tangle::default();
    let err = |ln: usize, msg: &str| SkeinError::Parse {
        line: ln + 1,
        col: 1,
        msg: msg.to_string(),
    };
    for (ln, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "crossings:" => {
                let n: usize = toks
                    .get(1)
                    .ok_or_else(|| err(ln, "missing count"))?
                    .parse()
                    .map_err(|_| err(ln, "bad count"))?;
                t.xings = vec![
                    Some(Xing {
                        sign: 1,
                        over0: true,
                        out: [(Target::End, 0), (Target::End, 0)],
                    });
                    n
                ];
            }
            "c" => {
                let id: usize = toks
                    .get(1)
                    .ok_or_else(|| err(ln, "missing id"))?
                    .parse()
                    .map_err(|_| err(ln, "bad id"))?;
                let x = t
                    .xings
                    .get_mut(id)
                    .and_then(|x| x.as_mut())
                    .ok_or_else(|| err(ln, "crossing id out of range"))?;
                x.sign = match *toks.get(2).ok_or_else(|| err(ln, "missing sign"))? {
                    "+" => 1,
                    "-" => -1,
                    _ => return Err(err(ln, "bad sign")),
                };
                x.over0 = match *toks.get(3).ok_or_else(|| err(ln, "missing over"))? {
                    "a" => true,
                    "b" => false,
                    _ => return Err(err(ln, "bad over strand")),
                };
            }
            "e" => {
                let from = parse_target(toks.get(1).ok_or_else(|| err(ln, "missing from"))?)?;
                let to = parse_target(toks.get(2).ok_or_else(|| err(ln, "missing to"))?)?;
                let seam: i64 = toks
                    .get(3)
                    .ok_or_else(|| err(ln, "missing seam"))?
                    .parse()
                    .map_err(|_| err(ln, "bad seam"))?;
                match from {
                    Target::In(c, s) => {
                        let x = t
                            .xings
                            .get_mut(c)
                            .and_then(|x| x.as_mut())
                            .ok_or_else(|| err(ln, "edge source out of range"))?;
                        x.out[s as usize] = (to, seam);
                    }
                    Target::End => return Err(err(ln, "edge cannot start at B")),
                }
            }
            "arc" => {
                let to = parse_target(toks.get(1).ok_or_else(|| err(ln, "missing target"))?)?;
                let seam: i64 = toks
                    .get(2)
                    .ok_or_else(|| err(ln, "missing seam"))?
                    .parse()
                    .map_err(|_| err(ln, "bad seam"))?;
                t.arc = Some((to, seam));
            }
            "loop" => {
                let winding: i64 = toks
                    .get(1)
                    .ok_or_else(|| err(ln, "missing winding"))?
                    .parse()
                    .map_err(|_| err(ln, "bad winding"))?;
                let curls: i64 = toks
                    .get(2)
                    .ok_or_else(|| err(ln, "missing curls"))?
                    .parse()
                    .map_err(|_| err(ln, "bad curls"))?;
                t.loops.push(FreeLoop { winding, curls });
            }
            other => return Err(err(ln, &format!("unknown record {other:?}"))),
        }
    }
    Ok(t)
}

/// Detect which of the two formats a file uses and produce the tangle.
pub fn parse_diagram_file(input: &str) -> Result<Tangle> {
    let first = input
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first.starts_with("strands:") {
        sliceword_from_text(input)?.compile()
    } else {
        tangle_from_text(input)
    }
}
