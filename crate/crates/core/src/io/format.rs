//! Line-oriented text format for instances.
//!
//! ```text
//! # anything after '#' is ignored
//! format 1
//! model standard        # or edge
//! kind frames           # or rects
//! diagonal 5            # optional: the line x + y = 5
//! vertical 0            # optional: the line x = 0
//! horizontal 0          # optional: the line y = 0
//! f1 0 5 3 -2           # frame: id, corner x, corner y, hspan, vspan
//! ```
//!
//! Rectangle records are `id lo.x lo.y hi.x hi.y`. Header lines have two
//! tokens and records five, so an id may not be mistaken for a keyword.

use std::fmt::Write;

use thiserror::Error;

use crate::geometry::{Diagonal, LFrame, Model, Point, Rect};
use crate::instance::{GeomInstance, InstanceError, Objects};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid instance: {0}")]
    Validation(#[from] InstanceError),
}

fn perr<T>(line: usize, msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError::Parse { line, msg: msg.into() })
}

fn int(line: usize, tok: &str) -> Result<i64, FormatError> {
    tok.parse().or_else(|_| perr(line, format!("expected an integer, found `{tok}`")))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Frames,
    Rects,
}

pub fn parse_instance(text: &str) -> Result<GeomInstance, FormatError> {
    let mut version = None;
    let mut model = Model::Standard;
    let mut kind = None;
    let (mut diagonal, mut vertical, mut horizontal) = (None, None, None);
    let mut frames = Vec::new();
    let mut rects = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        if version.is_none() {
            if toks.len() != 2 || toks[0] != "format" {
                return perr(line, "file must start with `format <version>`");
            }
            let v: u32 = toks[1].parse().or_else(|_| perr(line, "bad format version"))?;
            if v != FORMAT_VERSION {
                return perr(line, format!("unsupported format version {v}"));
            }
            version = Some(v);
            continue;
        }
        let records_started = !frames.is_empty() || !rects.is_empty();
        match toks.len() {
            2 => {
                if records_started {
                    return perr(line, "header line after the first record");
                }
                let (key, val) = (toks[0], toks[1]);
                match key {
                    "model" => model = val.parse().or_else(|e: String| perr(line, e))?,
                    "kind" => {
                        kind = Some(match val {
                            "frames" => Kind::Frames,
                            "rects" => Kind::Rects,
                            _ => return perr(line, format!("unknown kind `{val}`")),
                        })
                    }
                    "diagonal" => diagonal = Some(Diagonal::new(int(line, val)?)),
                    "vertical" => vertical = Some(int(line, val)?),
                    "horizontal" => horizontal = Some(int(line, val)?),
                    "format" => return perr(line, "repeated format line"),
                    _ => return perr(line, format!("unknown header key `{key}`")),
                }
            }
            5 => {
                let id = toks[0].to_string();
                let n: Vec<i64> = toks[1..].iter().map(|t| int(line, t)).collect::<Result<_, _>>()?;
                match kind.unwrap_or(Kind::Frames) {
                    Kind::Frames => {
                        frames.push(LFrame { id, corner: Point::new(n[0], n[1]), hspan: n[2], vspan: n[3] })
                    }
                    Kind::Rects => rects.push(Rect { id, lo: Point::new(n[0], n[1]), hi: Point::new(n[2], n[3]) }),
                }
            }
            k => return perr(line, format!("expected 2 or 5 fields, found {k}")),
        }
    }
    if version.is_none() {
        return perr(1, "empty file");
    }
    let objects = match kind.unwrap_or(Kind::Frames) {
        Kind::Frames => Objects::Frames(frames),
        Kind::Rects => Objects::Rects(rects),
    };
    let inst = GeomInstance { model, objects, diagonal, vertical, horizontal };
    inst.validate()?;
    Ok(inst)
}

pub fn emit_instance(inst: &GeomInstance) -> String {
    let mut out = String::new();
    writeln!(out, "format {FORMAT_VERSION}").unwrap();
    writeln!(out, "model {}", inst.model.as_str()).unwrap();
    let kind = match inst.objects {
        Objects::Frames(_) => "frames",
        Objects::Rects(_) => "rects",
    };
    writeln!(out, "kind {kind}").unwrap();
    if let Some(d) = inst.diagonal {
        writeln!(out, "diagonal {}", d.d).unwrap();
    }
    if let Some(v) = inst.vertical {
        writeln!(out, "vertical {v}").unwrap();
    }
    if let Some(h) = inst.horizontal {
        writeln!(out, "horizontal {h}").unwrap();
    }
    match &inst.objects {
        Objects::Frames(fs) => {
            for f in fs {
                writeln!(out, "{} {} {} {} {}", f.id, f.corner.x, f.corner.y, f.hspan, f.vspan).unwrap();
            }
        }
        Objects::Rects(rs) => {
            for r in rs {
                writeln!(out, "{} {} {} {} {}", r.id, r.lo.x, r.lo.y, r.hi.x, r.hi.y).unwrap();
            }
        }
    }
    out
}
