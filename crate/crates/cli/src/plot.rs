//! Region diagrams over a window of the special lattice.

use std::collections::BTreeSet;
use std::fmt::Write;

use symcoh::exact_rank2::conics_nonvanishing;
use symcoh::scalar::render;
use symcoh::{SymmetricPair, Q};

use crate::CliResult;

/// Nonvanishing degrees at each lattice point of a window.
pub struct Grid {
    pub title: String,
    pub xs: (i64, i64),
    pub ys: (i64, i64),
    /// Row-major from `ys.0`, each row from `xs.0`.
    pub cells: Vec<BTreeSet<usize>>,
    pub degrees: Vec<usize>,
    /// `-rho_i`: corner of the Omega cones.
    pub corner: [Q; 2],
    pub source: &'static str,
}

impl Grid {
    pub fn compute(pair: &SymmetricPair, conics: bool, win: [(i64, i64); 2]) -> CliResult<Self> {
        let [xs, ys] = win;
        let mut cells = Vec::new();
        for y in ys.0..=ys.1 {
            for x in xs.0..=xs.1 {
                let set = if conics {
                    conics_nonvanishing(x, y)
                } else {
                    let l = pair.special_weight_ints(&[x, y]);
                    symcoh::cohomology::bound_cohomology(pair, &l)?
                        .support()
                        .into_iter()
                        .collect()
                };
                cells.push(set);
            }
        }
        let degrees: BTreeSet<usize> = cells.iter().flatten().copied().collect();
        let rho = pair.rho_coefficients();
        Ok(Self {
            title: pair.name().to_string(),
            xs,
            ys,
            cells,
            degrees: degrees.into_iter().collect(),
            corner: [-rho[0], -rho[1]],
            source: if conics { "exact" } else { "bound" },
        })
    }

    fn at(&self, x: i64, y: i64) -> &BTreeSet<usize> {
        let w = (self.xs.1 - self.xs.0 + 1) as usize;
        &self.cells[(y - self.ys.0) as usize * w + (x - self.xs.0) as usize]
    }
}

fn degree_char(d: usize) -> char {
    std::char::from_digit(d as u32 % 36, 36).unwrap_or('?')
}

/// One character per point: `.` nothing, the degree in base 36, `*` several.
pub fn ascii(g: &Grid) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# {} ({}), x in [{}, {}], y in [{}, {}]", g.title, g.source, g.xs.0, g.xs.1, g.ys.0, g.ys.1);
    let _ = writeln!(s, "# Omega corner at ({}, {})", render(&g.corner[0]), render(&g.corner[1]));
    for y in (g.ys.0..=g.ys.1).rev() {
        for x in g.xs.0..=g.xs.1 {
            let c = g.at(x, y);
            let ch = match c.len() {
                0 => '.',
                1 => degree_char(*c.iter().next().unwrap()),
                _ => '*',
            };
            s.push(ch);
        }
        let _ = writeln!(s, " {y}");
    }
    let degs: Vec<String> = g.degrees.iter().map(|d| format!("{}=H^{d}", degree_char(*d))).collect();
    let _ = writeln!(s, "# {}  *=several  .=none", degs.join(" "));
    s
}

const CELL: i64 = 20;
const MARGIN: i64 = 40;
const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

fn glyph(kind: usize, cx: i64, cy: i64) -> String {
    let r = CELL / 4;
    let color = COLORS[kind % COLORS.len()];
    match kind % 4 {
        0 => format!(r#"<circle cx="{cx}" cy="{cy}" r="{r}" fill="none" stroke="{color}"/>"#),
        1 => format!(
            r#"<path d="M{} {cy}H{}M{cx} {}V{}" stroke="{color}"/>"#,
            cx - r,
            cx + r,
            cy - r,
            cy + r
        ),
        2 => format!(
            r#"<path d="M{} {}L{} {}M{} {}L{} {}" stroke="{color}"/>"#,
            cx - r,
            cy - r,
            cx + r,
            cy + r,
            cx - r,
            cy + r,
            cx + r,
            cy - r
        ),
        _ => format!(
            r#"<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="{color}"/>"#,
            cx - r,
            cy - r,
            2 * r,
            2 * r
        ),
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// `offset * CELL + MARGIN` for a rational offset, printed exactly to
/// two decimals.
fn px(offset: Q) -> String {
    let scaled = offset * Q::from(CELL) + Q::from(MARGIN);
    let (n, d) = (*scaled.numer(), *scaled.denom());
    if d == 1 {
        n.to_string()
    } else {
        // Two decimals, computed exactly.
        let hundredths = (n * 100).div_euclid(d);
        format!("{}.{:02}", hundredths.div_euclid(100), hundredths.rem_euclid(100))
    }
}

/// SVG with one glyph per degree (circle, plus, cross, square, ...).
pub fn svg(g: &Grid) -> String {
    let w = (g.xs.1 - g.xs.0) * CELL + 2 * MARGIN;
    let h = (g.ys.1 - g.ys.0) * CELL + 2 * MARGIN + 20 * g.degrees.len() as i64 + 20;
    let plot_h = (g.ys.1 - g.ys.0) * CELL + 2 * MARGIN;
    // SVG y grows downwards.
    let xp = |x: i64| (x - g.xs.0) * CELL + MARGIN;
    let yp = |y: i64| (g.ys.1 - y) * CELL + MARGIN;
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(s, "<title>{} ({})</title>", escape(&g.title), g.source);
    let _ = writeln!(s, r##"<rect width="{w}" height="{h}" fill="#ffffff"/>"##);
    // Axes through the origin when visible.
    if g.xs.0 <= 0 && 0 <= g.xs.1 {
        let _ = writeln!(s, r##"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke="#bbbbbb"/>"##, xp(0), yp(g.ys.1), yp(g.ys.0));
    }
    if g.ys.0 <= 0 && 0 <= g.ys.1 {
        let _ = writeln!(s, r##"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}" stroke="#bbbbbb"/>"##, yp(0), xp(g.xs.0), xp(g.xs.1));
    }
    // Omega corner lines x = -rho_1, y = -rho_2.
    let cx = px(g.corner[0] - Q::from(g.xs.0));
    let cy = px(Q::from(g.ys.1) - g.corner[1]);
    let _ = writeln!(
        s,
        r##"<path d="M{cx} {}V{}M{} {cy}H{}" stroke="#888888" stroke-dasharray="4 3"/>"##,
        yp(g.ys.1),
        yp(g.ys.0),
        xp(g.xs.0),
        xp(g.xs.1)
    );
    for y in g.ys.0..=g.ys.1 {
        for x in g.xs.0..=g.xs.1 {
            let c = g.at(x, y);
            if c.is_empty() {
                let _ = writeln!(s, r##"<circle cx="{}" cy="{}" r="1" fill="#cccccc"/>"##, xp(x), yp(y));
            }
            for d in c {
                let k = g.degrees.iter().position(|e| e == d).unwrap_or(0);
                let _ = writeln!(s, "{}", glyph(k, xp(x), yp(y)));
            }
        }
    }
    for (k, d) in g.degrees.iter().enumerate() {
        let ly = plot_h + 20 * k as i64 + 10;
        let _ = writeln!(s, "{}", glyph(k, MARGIN, ly));
        let _ = writeln!(s, r#"<text x="{}" y="{}" font-size="12">H^{d} nonzero</text>"#, MARGIN + 12, ly + 4);
    }
    let _ = writeln!(s, "</svg>");
    s
}
