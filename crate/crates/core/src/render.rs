//! Deterministic ASCII and SVG drawings of a word, one letter per row.
//!
//! Classical crossings carry a solid dot (`*` in ASCII), virtual crossings a
//! circle (`o`).

use std::fmt::Write;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::BraidWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

impl FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii" => Ok(RenderFormat::Ascii),
            "svg" => Ok(RenderFormat::Svg),
            _ => Err(Error::Syntax(format!("unknown render format `{s}` (expected ascii or svg)"))),
        }
    }
}

pub fn render(word: &BraidWord, format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => render_ascii(word),
        RenderFormat::Svg => render_svg(word),
    }
}

const ASCII_PITCH: usize = 4;

/// Strand columns every four characters, a header with positions 1..=n and
/// the letter at the end of each row.
///
/// ```text
/// 1   2   3
///  \*/    |   z1
/// |    \o/    t2
/// ```
pub fn render_ascii(word: &BraidWord) -> String {
    let n = word.strands();
    let width = ASCII_PITCH * (n - 1) + 1;
    let mut out = String::new();
    let mut header = vec![b' '; width];
    for k in 0..n {
        let label = (k + 1).to_string();
        for (d, b) in label.bytes().enumerate() {
            if ASCII_PITCH * k + d < width {
                header[ASCII_PITCH * k + d] = b;
            } else {
                header.push(b);
            }
        }
    }
    out.push_str(String::from_utf8(header).expect("ascii").trim_end());
    out.push('\n');
    for l in word.letters() {
        let mut row = vec![b' '; width];
        for k in 0..n {
            row[ASCII_PITCH * k] = b'|';
        }
        let c = ASCII_PITCH * (l.index() - 1);
        row[c] = b' ';
        row[c + ASCII_PITCH] = b' ';
        row[c + 1] = b'\\';
        row[c + 2] = if l.is_classical() { b'*' } else { b'o' };
        row[c + 3] = b'/';
        out.push_str(std::str::from_utf8(&row).expect("ascii"));
        let _ = writeln!(out, "   {l}");
    }
    out
}

const PITCH: usize = 40;
const ROW: usize = 40;
const MARGIN: usize = 20;

/// Strands at a fixed horizontal pitch, crossings as straight diagonals.
pub fn render_svg(word: &BraidWord) -> String {
    let n = word.strands();
    let width = 2 * MARGIN + PITCH * (n - 1);
    let height = 2 * MARGIN + ROW * word.len().max(1);
    let x = |k: usize| MARGIN + PITCH * k;
    let y = |r: usize| MARGIN + ROW * r;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"<g stroke="black" stroke-width="2" fill="none">"#);
    if word.is_empty() {
        for k in 0..n {
            let _ = writeln!(out, r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#, x(k), y(0), y(1));
        }
    }
    let mut markers = String::new();
    for (r, l) in word.letters().iter().enumerate() {
        let i = l.index() - 1;
        for k in (0..n).filter(|&k| k != i && k != i + 1) {
            let _ = writeln!(out, r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#, x(k), y(r), y(r + 1));
        }
        let _ = writeln!(out, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, x(i), y(r), x(i + 1), y(r + 1));
        let _ = writeln!(out, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, x(i + 1), y(r), x(i), y(r + 1));
        let (cx, cy) = (x(i) + PITCH / 2, y(r) + ROW / 2);
        let fill = if l.is_classical() { "black" } else { "white" };
        let _ = writeln!(markers, r#"<circle cx="{cx}" cy="{cy}" r="5" fill="{fill}"/>"#);
    }
    out.push_str(&markers);
    out.push_str("</g>\n</svg>\n");
    out
}
