//! Extraction of typed values from model text: delimited answer blocks,
//! coordinate tuples, and tool requests.
//!
//! Every function here is total over arbitrary input text; malformed input
//! becomes a typed error, never a panic. The wire grammar is documented in
//! `docs/wire-grammar.md` and is the same grammar the prompt formatter
//! promises to the model.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use regex::Regex;
use thiserror::Error;

use crate::geometry::{normalize_angle_deg, AxisBox, OrientedBox};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("no coordinate tuples found in answer text")]
    EmptyAnswer,
    #[error("no recognizable tool request; available tools: {menu:?}")]
    UnknownTool { menu: Vec<String> },
}

/// Coordinates outside `[-CLAMP_WINDOW, 1 + CLAMP_WINDOW]` reject the whole
/// tuple; values inside the window but outside `[0, 1]` are clamped. Keeps
/// small overshoot while refusing hallucinated pixel-scale numbers.
pub const CLAMP_WINDOW: f64 = 0.05;

/// Geometry of one parsed detection.
#[derive(Debug, Clone, PartialEq)]
pub enum DetGeometry {
    Axis(AxisBox),
    Oriented(OrientedBox),
}

/// One detection parsed off the wire.
#[derive(Debug, Clone, PartialEq)]
pub struct Detection {
    pub label: String,
    pub geometry: DetGeometry,
    /// True when the tuple needed clamping or coordinate swapping.
    pub clipped: bool,
}

/// A batch of detections from a single answer.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ParsedAnswer {
    pub detections: Vec<Detection>,
}

impl ParsedAnswer {
    pub fn is_empty(&self) -> bool {
        self.detections.is_empty()
    }

    /// Serialize back to the wire grammar, one detection per line.
    pub fn serialize(&self) -> String {
        self.detections
            .iter()
            .map(|d| {
                let coords = match &d.geometry {
                    DetGeometry::Axis(b) => format!("({},{},{},{})", b.x1, b.y1, b.x2, b.y2),
                    DetGeometry::Oriented(o) => {
                        format!("({},{},{},{},{})", o.cx, o.cy, o.w, o.h, o.angle_deg)
                    }
                };
                if d.label.is_empty() {
                    coords
                } else {
                    format!("{}: {}", d.label, coords)
                }
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn blocks_for(text: &str, fence: &str) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    let mut pos = 0;
    while let Some(rel) = text[pos..].find(fence) {
        let start = pos + rel;
        let content_start = start + fence.len();
        match text[content_start..].find(fence) {
            Some(end_rel) => {
                out.push((start, text[content_start..content_start + end_rel].to_string()));
                pos = content_start + end_rel + fence.len();
            }
            // Unbalanced fence: treat as absent.
            None => break,
        }
    }
    out
}

fn strip_fence_tag(content: &str) -> &str {
    if let Some((first, rest)) = content.split_once('\n') {
        let tag = first.trim();
        if !tag.is_empty()
            && tag.len() <= 16
            && tag.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-' || c == '+')
        {
            return rest;
        }
    }
    content
}

/// Content of the last well-formed delimited block. Blocks are triple
/// backtick fences (optionally language-tagged) or triple-quoted strings;
/// the last block wins because models often restate earlier drafts.
pub fn extract_delimited(text: &str) -> Option<String> {
    let mut blocks = blocks_for(text, "```");
    blocks.extend(blocks_for(text, "\"\"\""));
    blocks.sort_by_key(|(pos, _)| *pos);
    blocks
        .pop()
        .map(|(_, content)| strip_fence_tag(&content).trim().to_string())
}

const FLOAT: &str = r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?";
const LABEL: &str = r"[A-Za-z][A-Za-z0-9 _'\-]*?";

fn axis_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| {
        Regex::new(&format!(
            r"(?:({LABEL})\s*:\s*)?\(\s*({FLOAT})\s*,\s*({FLOAT})\s*,\s*({FLOAT})\s*,\s*({FLOAT})\s*\)"
        ))
        .expect("static regex")
    })
}

fn oriented_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| {
        Regex::new(&format!(
            r"(?:({LABEL})\s*:\s*)?\(\s*({FLOAT})\s*,\s*({FLOAT})\s*,\s*({FLOAT})\s*,\s*({FLOAT})\s*,\s*({FLOAT})\s*\)"
        ))
        .expect("static regex")
    })
}

/// Clamp into `[0, 1]` under the tolerance policy. `None` rejects the tuple.
fn admit(v: f64) -> Option<(f64, bool)> {
    if !v.is_finite() || !(-CLAMP_WINDOW..=1.0 + CLAMP_WINDOW).contains(&v) {
        return None;
    }
    let clamped = v.clamp(0.0, 1.0);
    Some((clamped, clamped != v))
}

/// Scan text for `label: (x1,y1,x2,y2)` and bare `(x1,y1,x2,y2)` tuples.
pub fn parse_boxes(text: &str) -> Result<ParsedAnswer, ParseError> {
    let mut detections = Vec::new();
    for cap in axis_re().captures_iter(text) {
        let label = cap.get(1).map(|m| m.as_str().trim().to_string()).unwrap_or_default();
        let vals: Option<Vec<f64>> = (2..=5).map(|i| cap[i].parse::<f64>().ok()).collect();
        let Some(vals) = vals else { continue };
        let admitted: Option<Vec<(f64, bool)>> = vals.into_iter().map(admit).collect();
        let Some(admitted) = admitted else { continue };
        let mut clipped = admitted.iter().any(|(_, c)| *c);
        let (mut x1, mut y1, mut x2, mut y2) =
            (admitted[0].0, admitted[1].0, admitted[2].0, admitted[3].0);
        if x1 > x2 {
            std::mem::swap(&mut x1, &mut x2);
            clipped = true;
        }
        if y1 > y2 {
            std::mem::swap(&mut y1, &mut y2);
            clipped = true;
        }
        let geometry = DetGeometry::Axis(
            AxisBox::new(x1, y1, x2, y2).expect("clamped and ordered coordinates"),
        );
        detections.push(Detection {
            label,
            geometry,
            clipped,
        });
    }
    if detections.is_empty() {
        return Err(ParseError::EmptyAnswer);
    }
    Ok(ParsedAnswer { detections })
}

/// Scan text for `label: (cx,cy,w,h,angle)` oriented tuples. The angle is
/// reduced modulo 180 into `[0, 180)`.
pub fn parse_oriented(text: &str) -> Result<ParsedAnswer, ParseError> {
    let mut detections = Vec::new();
    for cap in oriented_re().captures_iter(text) {
        let label = cap.get(1).map(|m| m.as_str().trim().to_string()).unwrap_or_default();
        let vals: Option<Vec<f64>> = (2..=6).map(|i| cap[i].parse::<f64>().ok()).collect();
        let Some(vals) = vals else { continue };
        let Some((cx, c1)) = admit(vals[0]) else { continue };
        let Some((cy, c2)) = admit(vals[1]) else { continue };
        let Some((w, c3)) = admit(vals[2]) else { continue };
        let Some((h, c4)) = admit(vals[3]) else { continue };
        if w <= 0.0 || h <= 0.0 || !vals[4].is_finite() {
            continue;
        }
        let angle = normalize_angle_deg(vals[4]);
        let geometry = DetGeometry::Oriented(
            OrientedBox::new(cx, cy, w, h, angle).expect("validated components"),
        );
        detections.push(Detection {
            label,
            geometry,
            clipped: c1 || c2 || c3 || c4,
        });
    }
    if detections.is_empty() {
        return Err(ParseError::EmptyAnswer);
    }
    Ok(ParsedAnswer { detections })
}

/// What the model wants next: request a tool or stop with a final answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Continue,
    Final,
}

/// Parsed model intent for one response.
#[derive(Debug, Clone, PartialEq)]
pub struct Thought {
    pub verdict: Verdict,
    /// Present exactly when `verdict == Continue`.
    pub tool_id: Option<String>,
    pub tool_args: BTreeMap<String, String>,
    pub rationale: String,
}

/// Tool-name vocabulary used to resolve free-text tool mentions.
#[derive(Debug, Clone, Default)]
pub struct ToolLexicon {
    pub entries: Vec<ToolLexEntry>,
}

#[derive(Debug, Clone)]
pub struct ToolLexEntry {
    pub id: String,
    /// Lowercase display forms accepted for this tool, e.g. "zoom in".
    pub synonyms: Vec<String>,
    /// When set, a bare 4-tuple in the text is taken as the `region` arg.
    pub implicit_region: bool,
}

impl ToolLexicon {
    pub fn ids(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.id.clone()).collect()
    }

    fn resolve(&self, name: &str) -> Option<&ToolLexEntry> {
        let lowered = name.to_lowercase();
        self.entries
            .iter()
            .find(|e| e.id == lowered || e.synonyms.iter().any(|s| *s == lowered))
    }
}

fn word_bounded(haystack: &str, pos: usize, len: usize) -> bool {
    let before_ok = pos == 0
        || !haystack[..pos]
            .chars()
            .next_back()
            .is_some_and(|c| c.is_ascii_alphanumeric());
    let after_ok = pos + len >= haystack.len()
        || !haystack[pos + len..]
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_alphanumeric());
    before_ok && after_ok
}

fn affirmation_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| {
        Regex::new(r"(?i)\bfinal\s+(prediction|answer|result|output|coordinates|detection)s?\b")
            .expect("static regex")
    })
}

fn tool_clause_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| {
        // One level of nesting so tuple-valued args keep their parens.
        Regex::new(r"(?i)\btool\s*:\s*([a-z][a-z0-9_ \-]*?)\s*\(((?:[^()]|\([^()]*\))*)\)")
            .expect("static regex")
    })
}

/// Split `k=v, k=v` argument text on top-level commas (tuples keep theirs).
fn parse_arg_clause(body: &str) -> BTreeMap<String, String> {
    let mut args = BTreeMap::new();
    let mut depth = 0usize;
    let mut current = String::new();
    let mut fields = Vec::new();
    for c in body.chars() {
        match c {
            '(' | '[' => {
                depth += 1;
                current.push(c);
            }
            ')' | ']' => {
                depth = depth.saturating_sub(1);
                current.push(c);
            }
            ',' if depth == 0 => {
                fields.push(std::mem::take(&mut current));
            }
            _ => current.push(c),
        }
    }
    fields.push(current);
    for field in fields {
        if let Some((k, v)) = field.split_once('=') {
            let key = k.trim().to_lowercase();
            if !key.is_empty() {
                args.insert(key, v.trim().to_string());
            }
        }
    }
    args
}

/// Classify a model response: final (a delimited block parses as an answer
/// and the text affirms finality, or `force_final` is set by the budget) or
/// continue with the first registered tool mentioned in the text.
pub fn parse_thought(
    text: &str,
    lexicon: &ToolLexicon,
    force_final: bool,
) -> Result<Thought, ParseError> {
    let block_answer = extract_delimited(text)
        .map(|b| parse_boxes(&b).or_else(|_| parse_oriented(&b)).is_ok())
        .unwrap_or(false);
    if block_answer && (force_final || affirmation_re().is_match(text)) {
        return Ok(Thought {
            verdict: Verdict::Final,
            tool_id: None,
            tool_args: BTreeMap::new(),
            rationale: text.to_string(),
        });
    }

    // Explicit `tool: name(arg=value, ...)` clause wins when it resolves.
    if let Some(cap) = tool_clause_re().captures(text) {
        if let Some(entry) = lexicon.resolve(cap[1].trim()) {
            let mut tool_args = parse_arg_clause(&cap[2]);
            fill_implicit_region(entry, text, &mut tool_args);
            return Ok(Thought {
                verdict: Verdict::Continue,
                tool_id: Some(entry.id.clone()),
                tool_args,
                rationale: text.to_string(),
            });
        }
    }

    // Otherwise the earliest synonym mention wins; longest match on ties.
    let lowered = text.to_lowercase();
    let mut best: Option<(usize, usize, &ToolLexEntry)> = None;
    for entry in &lexicon.entries {
        for syn in entry.synonyms.iter().chain(std::iter::once(&entry.id)) {
            let mut from = 0;
            while let Some(rel) = lowered[from..].find(syn.as_str()) {
                let pos = from + rel;
                if word_bounded(&lowered, pos, syn.len()) {
                    let better = match best {
                        None => true,
                        Some((bp, bl, _)) => pos < bp || (pos == bp && syn.len() > bl),
                    };
                    if better {
                        best = Some((pos, syn.len(), entry));
                    }
                    break;
                }
                from = pos + 1;
            }
        }
    }
    match best {
        Some((_, _, entry)) => {
            let mut tool_args = BTreeMap::new();
            fill_implicit_region(entry, text, &mut tool_args);
            Ok(Thought {
                verdict: Verdict::Continue,
                tool_id: Some(entry.id.clone()),
                tool_args,
                rationale: text.to_string(),
            })
        }
        None => Err(ParseError::UnknownTool {
            menu: lexicon.ids(),
        }),
    }
}

fn fill_implicit_region(entry: &ToolLexEntry, text: &str, args: &mut BTreeMap<String, String>) {
    if entry.implicit_region && !args.contains_key("region") {
        if let Some(cap) = axis_re().captures(text) {
            args.insert(
                "region".to_string(),
                format!("({},{},{},{})", &cap[2], &cap[3], &cap[4], &cap[5]),
            );
        }
    }
}
