//! Deterministic SVG Minkowski diagrams.
//!
//! The first coordinate runs up the vertical axis and the second along the
//! horizontal axis, in both documents of a pair. Which raw coordinate plays
//! the role of time after the transform is conveyed only by axis labels.
//! All numbers are written with a fixed number of decimals so identical
//! inputs yield byte-identical output.

use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::scenario::{Event, Scenario, Window};
use crate::vector::TwoVector;
use crate::worldline::{transform_worldline, Worldline, WorldlineKind};

#[derive(Debug, Clone, PartialEq)]
pub struct DiagramStyle {
    pub width: u32,
    pub height: u32,
    pub particle_color: String,
    pub lightray_color: String,
    /// Labels of the (vertical, horizontal) axes of the original diagram.
    pub axis_labels: (String, String),
    /// Labels of the (vertical, horizontal) axes of the transformed diagram.
    pub transformed_axis_labels: (String, String),
    pub decimal_places: usize,
}

impl Default for DiagramStyle {
    fn default() -> Self {
        DiagramStyle {
            width: 600,
            height: 600,
            particle_color: "blue".into(),
            lightray_color: "red".into(),
            axis_labels: ("\u{3be}\u{2081} = ct".into(), "\u{3be}\u{2082} = x".into()),
            transformed_axis_labels: (
                "\u{3b7}\u{2081} = x\u{2032}".into(),
                "\u{3b7}\u{2082} = ct\u{2032}".into(),
            ),
            decimal_places: 6,
        }
    }
}

fn valid_color(c: &str) -> bool {
    !c.is_empty()
        && c.chars()
            .all(|ch| ch.is_ascii_alphanumeric() || "#(),.% ".contains(ch))
}

impl DiagramStyle {
    pub fn validate(&self) -> Result<()> {
        if self.width == 0 || self.height == 0 {
            return Err(Error::InvalidStyle(
                "width and height must be positive".into(),
            ));
        }
        if !(1..=12).contains(&self.decimal_places) {
            return Err(Error::InvalidStyle(format!(
                "decimal places must be in 1..=12, got {}",
                self.decimal_places
            )));
        }
        for c in [&self.particle_color, &self.lightray_color] {
            if !valid_color(c) {
                return Err(Error::InvalidStyle(format!(
                    "unsupported color literal `{c}`"
                )));
            }
        }
        Ok(())
    }

    fn color(&self, kind: WorldlineKind) -> &str {
        match kind {
            WorldlineKind::Particle => &self.particle_color,
            WorldlineKind::LightRay => &self.lightray_color,
        }
    }
}

/// Fixed-point with `-0` folded to `0`.
fn fixed(x: f64, decimals: usize) -> String {
    let s = format!("{x:.decimals$}");
    if s.starts_with('-') && s[1..].bytes().all(|b| b == b'0' || b == b'.') {
        s[1..].to_owned()
    } else {
        s
    }
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

/// A standalone SVG 1.1 document under construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SvgDocument {
    title: String,
    width: u32,
    height: u32,
    window: Window,
    decimals: usize,
    elements: Vec<String>,
    line_count: usize,
}

impl SvgDocument {
    fn new(title: String, window: Window, style: &DiagramStyle) -> SvgDocument {
        SvgDocument {
            title,
            width: style.width,
            height: style.height,
            window,
            decimals: style.decimal_places,
            elements: Vec::new(),
            line_count: 0,
        }
    }

    fn num(&self, x: f64) -> String {
        fixed(x, self.decimals)
    }

    /// Pixel position of a spacetime point: `c2` to the right, `c1` up.
    pub fn to_plot(&self, p: TwoVector) -> (f64, f64) {
        let w = &self.window;
        let x = (p.c2 - w.min.c2) / (w.max.c2 - w.min.c2) * f64::from(self.width);
        let y = (w.max.c1 - p.c1) / (w.max.c1 - w.min.c1) * f64::from(self.height);
        (x, y)
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    /// Number of worldline `<line>` elements.
    pub fn line_count(&self) -> usize {
        self.line_count
    }

    fn push_axes(&mut self, labels: &(String, String)) {
        let w = self.window;
        let (fw, fh) = (f64::from(self.width), f64::from(self.height));
        if (w.min.c2..=w.max.c2).contains(&0.0) {
            let (x, _) = self.to_plot(TwoVector::new(0.0, 0.0));
            let x = self.num(x);
            let el = format!(
                r#"<path class="axis" d="M {x} {} L {x} {}" stroke="black" stroke-width="1" fill="none"/>"#,
                self.num(fh),
                self.num(0.0)
            );
            self.elements.push(el);
        }
        if (w.min.c1..=w.max.c1).contains(&0.0) {
            let (_, y) = self.to_plot(TwoVector::new(0.0, 0.0));
            let y = self.num(y);
            let el = format!(
                r#"<path class="axis" d="M {} {y} L {} {y}" stroke="black" stroke-width="1" fill="none"/>"#,
                self.num(0.0),
                self.num(fw)
            );
            self.elements.push(el);
        }
        let vertical = format!(
            r#"<text class="axis-label" x="{}" y="{}" font-family="sans-serif" font-size="14">{}</text>"#,
            self.num(fw * 0.5 + 6.0),
            self.num(16.0),
            escape(&labels.0)
        );
        let horizontal = format!(
            r#"<text class="axis-label" x="{}" y="{}" font-family="sans-serif" font-size="14" text-anchor="end">{}</text>"#,
            self.num(fw - 6.0),
            self.num(fh * 0.5 - 6.0),
            escape(&labels.1)
        );
        self.elements.push(vertical);
        self.elements.push(horizontal);
    }

    fn push_worldline(&mut self, line: &Worldline, color: &str) -> bool {
        let Some((a, b)) = self.window.clip(line) else {
            return false;
        };
        let (x1, y1) = self.to_plot(a);
        let (x2, y2) = self.to_plot(b);
        let class = match line.kind() {
            WorldlineKind::Particle => "particle",
            WorldlineKind::LightRay => "lightray",
        };
        let el = format!(
            r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{color}" stroke-width="2"><title>{}</title></line>"#,
            self.num(x1),
            self.num(y1),
            self.num(x2),
            self.num(y2),
            escape(line.label())
        );
        self.elements.push(el);
        self.line_count += 1;
        true
    }

    /// Adds a labeled marker for each event. Window bounds are inclusive.
    pub fn annotate_events(&self, events: &[Event]) -> Result<SvgDocument> {
        let mut doc = self.clone();
        for e in events {
            if !self.window.contains(e.at) {
                return Err(Error::OutOfWindow {
                    label: e.label.clone(),
                });
            }
            let (x, y) = self.to_plot(e.at);
            doc.elements.push(format!(
                r#"<circle class="event" cx="{}" cy="{}" r="4" fill="black"/>"#,
                self.num(x),
                self.num(y)
            ));
            doc.elements.push(format!(
                r#"<text class="event-label" x="{}" y="{}" font-family="sans-serif" font-size="14">{}</text>"#,
                self.num(x + 6.0),
                self.num(y - 6.0),
                escape(&e.label)
            ));
        }
        Ok(doc)
    }
}

impl fmt::Display for SvgDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
            w = self.width,
            h = self.height
        );
        let _ = writeln!(out, "  <title>{}</title>", escape(&self.title));
        let _ = writeln!(
            out,
            r#"  <rect x="0" y="0" width="{}" height="{}" fill="white"/>"#,
            self.width, self.height
        );
        for el in &self.elements {
            let _ = writeln!(out, "  {el}");
        }
        out.push_str("</svg>\n");
        f.write_str(&out)
    }
}

/// Draws the scenario's worldlines before and after its transform.
///
/// Lines are clipped to the scenario window in both documents; a transformed
/// line that misses the window is left out. Fails with
/// [`Error::EmptyWindow`] when either document would have no lines.
pub fn render_pair(s: &Scenario, style: &DiagramStyle) -> Result<(SvgDocument, SvgDocument)> {
    style.validate()?;
    let window = *s.window();
    let mut original = SvgDocument::new(format!("{} (original)", s.name()), window, style);
    let mut transformed = SvgDocument::new(format!("{} (transformed)", s.name()), window, style);
    original.push_axes(&style.axis_labels);
    transformed.push_axes(&style.transformed_axis_labels);

    for line in s.worldlines() {
        original.push_worldline(line, style.color(line.kind()));
        let mapped = transform_worldline(s.transform(), line)?;
        transformed.push_worldline(&mapped, style.color(line.kind()));
    }
    if original.line_count == 0 || transformed.line_count == 0 {
        return Err(Error::EmptyWindow);
    }
    Ok((original, transformed))
}

/// [`render_pair`] plus the scenario's events: at their given positions in the
/// original document and at their mapped positions (when inside the window)
/// in the transformed one.
pub fn render_pair_with_events(
    s: &Scenario,
    style: &DiagramStyle,
) -> Result<(SvgDocument, SvgDocument)> {
    let (original, transformed) = render_pair(s, style)?;
    let mapped: Vec<Event> = s
        .events()
        .iter()
        .map(|e| Event::new(s.transform().apply(e.at), e.label.clone()))
        .filter(|e| s.window().contains(e.at))
        .collect();
    Ok((
        original.annotate_events(s.events())?,
        transformed.annotate_events(&mapped)?,
    ))
}
