//! Text and SVG output for tile grids.
//!
//! The ASCII form writes one fixed-width token per cell, cells separated by a
//! single space and rows by newlines:
//!
//! ```text
//! grid     := row ("\n" row)* "\n"?
//! row      := cell (" " cell)*
//! cell     := letter rotation mirror
//! letter   := "B" | "C" | "P" | "X" | "S" | "T"
//! rotation := "0" | "1" | "2" | "3"
//! mirror   := "." | "m"
//! ```
//!
//! Letters stand for BumpyCorner, Corner, Arm1, Arm2, Arm3 and Arm4. The
//! renderer always writes the canonical pose; the parser accepts any pose.

use std::fmt::Write as _;

use crate::error::{GridError, RenderError};
use crate::supertile::TileGrid;
use crate::tileset::{ArrowDir, ArrowKind, OrientedTile, Pose, Prototile, Side};

const LETTERS: [char; 6] = ['B', 'C', 'P', 'X', 'S', 'T'];

fn letter(p: Prototile) -> char {
    LETTERS[p.index()]
}

pub fn render_ascii(grid: &TileGrid) -> String {
    let mut out = String::with_capacity(grid.width() * grid.height() * 4);
    for row in 1..=grid.height() {
        for col in 1..=grid.width() {
            if col > 1 {
                out.push(' ');
            }
            let t = grid.get(row, col).canonical();
            out.push(letter(t.prototile));
            out.push(char::from(b'0' + t.pose.rotation()));
            out.push(if t.pose.mirror() { 'm' } else { '.' });
        }
        out.push('\n');
    }
    out
}

pub fn parse_ascii(text: &str) -> Result<TileGrid, GridError> {
    let mut width = None;
    let mut cells = Vec::new();
    let mut height = 0;
    for (i, line) in text.lines().enumerate() {
        let bad = |message: String| GridError::Ascii { line: i + 1, message };
        if line.trim().is_empty() {
            continue;
        }
        let mut n = 0;
        for token in line.split_whitespace() {
            let chars: Vec<char> = token.chars().collect();
            let [l, r, m] = chars[..] else {
                return Err(bad(format!("cell `{token}` is not three characters")));
            };
            let prototile = LETTERS
                .iter()
                .position(|&c| c == l)
                .and_then(Prototile::from_index)
                .ok_or_else(|| bad(format!("unknown tile letter `{l}`")))?;
            let rotation = r.to_digit(4).ok_or_else(|| bad(format!("bad rotation `{r}`")))? as u8;
            let mirror = match m {
                '.' => false,
                'm' => true,
                _ => return Err(bad(format!("bad mirror flag `{m}`"))),
            };
            cells.push(OrientedTile::new(prototile, Pose::new(rotation, mirror)));
            n += 1;
        }
        match width {
            None => width = Some(n),
            Some(w) if w != n => return Err(bad(format!("row has {n} cells, expected {w}"))),
            _ => {}
        }
        height += 1;
    }
    TileGrid::new(width.unwrap_or(0), height, cells)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderStyle {
    cell_size: f64,
    stroke_width: f64,
    emphasize_principal: bool,
    overlay: bool,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle { cell_size: 40.0, stroke_width: 1.0, emphasize_principal: true, overlay: false }
    }
}

impl RenderStyle {
    pub fn new(
        cell_size: f64,
        stroke_width: f64,
        emphasize_principal: bool,
        overlay: bool,
    ) -> Result<Self, RenderError> {
        if cell_size.is_nan() || cell_size <= 0.0 {
            return Err(RenderError::NonPositive("cell_size"));
        }
        if stroke_width.is_nan() || stroke_width <= 0.0 {
            return Err(RenderError::NonPositive("stroke_width"));
        }
        Ok(RenderStyle { cell_size, stroke_width, emphasize_principal, overlay })
    }

    pub fn with_overlay(mut self, overlay: bool) -> Self {
        self.overlay = overlay;
        self
    }

    pub fn cell_size(&self) -> f64 {
        self.cell_size
    }
}

// Glyph geometry, as fractions of a cell.
const SLOT_POS: [f64; 3] = [0.2, 0.5, 0.8];
const PRINCIPAL_LEN: f64 = 0.5;
const SIDE_LEN: f64 = 0.2;
const HEAD_LEN: f64 = 0.09;
const HEAD_HALF_WIDTH: f64 = 0.05;
const BUMP_RADIUS: f64 = 0.08;

const PALETTE: [&str; 6] = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

fn num(x: f64) -> String {
    let s = format!("{x:.2}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// Point on `side` at fraction `t` of the counter-clockwise walk, plus the
/// inward unit normal, in cell-local unit coordinates (y down).
fn slot_point(side: Side, t: f64) -> ((f64, f64), (f64, f64)) {
    match side {
        Side::N => ((1.0 - t, 0.0), (0.0, 1.0)),
        Side::E => ((1.0, 1.0 - t), (-1.0, 0.0)),
        Side::S => ((t, 1.0), (0.0, -1.0)),
        Side::W => ((0.0, t), (1.0, 0.0)),
    }
}

fn arrowhead(tip: (f64, f64), dir: (f64, f64), s: f64) -> String {
    let base = (tip.0 - dir.0 * HEAD_LEN, tip.1 - dir.1 * HEAD_LEN);
    let perp = (-dir.1 * HEAD_HALF_WIDTH, dir.0 * HEAD_HALF_WIDTH);
    format!(
        "{},{} {},{} {},{}",
        num(tip.0 * s),
        num(tip.1 * s),
        num((base.0 + perp.0) * s),
        num((base.1 + perp.1) * s),
        num((base.0 - perp.0) * s),
        num((base.1 - perp.1) * s)
    )
}

fn draw_tile(out: &mut String, tile: OrientedTile, style: &RenderStyle) {
    let s = style.cell_size;
    let _ = writeln!(
        out,
        r##"<rect width="{}" height="{}" fill="#fdfaf2" stroke="#999" stroke-width="{}"/>"##,
        num(s),
        num(s),
        num(style.stroke_width / 2.0)
    );
    for side in Side::ALL {
        let label = tile.label(side);
        for (slot, arrow) in label.slots.iter().enumerate() {
            let Some(arrow) = arrow else { continue };
            let (p, n) = slot_point(side, SLOT_POS[slot]);
            let (len, colour, width) = match arrow.kind {
                ArrowKind::Principal => {
                    let w = if style.emphasize_principal { 2.0 } else { 1.0 };
                    (PRINCIPAL_LEN, "#000", style.stroke_width * w)
                }
                ArrowKind::Side => (SIDE_LEN, "#b03030", style.stroke_width),
            };
            let q = (p.0 + n.0 * len, p.1 + n.1 * len);
            let _ = writeln!(
                out,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{colour}" stroke-width="{}"/>"#,
                num(p.0 * s),
                num(p.1 * s),
                num(q.0 * s),
                num(q.1 * s),
                num(width)
            );
            let head = match arrow.dir {
                ArrowDir::Out => arrowhead(p, (-n.0, -n.1), s),
                ArrowDir::In => arrowhead(q, n, s),
            };
            let _ = writeln!(out, r#"<polygon points="{head}" fill="{colour}"/>"#);
        }
    }
    if tile.prototile == Prototile::BumpyCorner {
        for (x, y) in [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)] {
            let _ = writeln!(
                out,
                r##"<circle cx="{}" cy="{}" r="{}" fill="#555"/>"##,
                num(x * s),
                num(y * s),
                num(BUMP_RADIUS * s)
            );
        }
    }
}

fn runs_along(tile: OrientedTile, dir: Side) -> bool {
    let principal = |side: Side| tile.label(side).slots[1].filter(|a| a.kind == ArrowKind::Principal).map(|a| a.dir);
    tile.prototile.is_arm() && principal(dir) == Some(ArrowDir::Out) && principal(dir.opposite()) == Some(ArrowDir::In)
}

/// Length of the arms leaving the corner at `[row, col]`, if at least one arm
/// ends inside the grid.
fn arm_length(grid: &TileGrid, row: usize, col: usize) -> Option<usize> {
    Side::ALL.into_iter().find_map(|dir| {
        let (dr, dc) = dir.offset();
        let mut len = 0;
        let (mut r, mut c) = (row, col);
        loop {
            r = r.checked_add_signed(dr).filter(|&r| r >= 1 && r <= grid.height())?;
            c = c.checked_add_signed(dc).filter(|&c| c >= 1 && c <= grid.width())?;
            if !runs_along(grid.get(r, c), dir) {
                return Some(len);
            }
            len += 1;
        }
    })
}

fn corner_facing(tile: OrientedTile) -> (f64, f64) {
    let side = |s: Side| tile.label(s).has_kind(ArrowKind::Side);
    let dx = if side(Side::E) { 1.0 } else { -1.0 };
    let dy = if side(Side::S) { 1.0 } else { -1.0 };
    (dx, dy)
}

fn draw_overlay(out: &mut String, grid: &TileGrid, style: &RenderStyle) {
    let s = style.cell_size;
    out.push_str("<g class=\"overlay\" fill=\"none\">\n");
    for row in 1..=grid.height() {
        for col in 1..=grid.width() {
            let tile = grid.get(row, col);
            if tile.prototile.is_arm() {
                continue;
            }
            let Some(len) = arm_length(grid, row, col) else { continue };
            let Some(rank) = (len + 1).checked_ilog2().filter(|&e| 1usize << e == len + 1) else { continue };
            let rank = rank as usize + 1;
            let extent = 2.0 * (len + 1) as f64 * s;
            let (dx, dy) = corner_facing(tile);
            let x0 = (col as f64 - 0.5) * s;
            let y0 = (row as f64 - 0.5) * s;
            let x = if dx > 0.0 { x0 } else { x0 - extent };
            let y = if dy > 0.0 { y0 } else { y0 - extent };
            let _ = writeln!(
                out,
                r#"<rect class="rank-{rank}" x="{}" y="{}" width="{}" height="{}" stroke="{}" stroke-width="{}" stroke-opacity="0.6"/>"#,
                num(x),
                num(y),
                num(extent),
                num(extent),
                PALETTE[(rank - 1) % PALETTE.len()],
                num(style.stroke_width * 2.0)
            );
        }
    }
    out.push_str("</g>\n");
}

/// SVG 1.1 document drawing every tile from its edge labels.
pub fn render_svg(grid: &TileGrid, style: &RenderStyle) -> String {
    let s = style.cell_size;
    let (w, h) = (grid.width() as f64 * s, grid.height() as f64 * s);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        num(w),
        num(h),
        num(w),
        num(h)
    );
    for row in 1..=grid.height() {
        for col in 1..=grid.width() {
            let tile = grid.get(row, col).canonical();
            let _ = writeln!(
                out,
                r#"<g class="cell" data-tile="{}" transform="translate({},{})">"#,
                tile.prototile,
                num((col - 1) as f64 * s),
                num((row - 1) as f64 * s)
            );
            draw_tile(&mut out, tile, style);
            out.push_str("</g>\n");
        }
    }
    if style.overlay {
        draw_overlay(&mut out, grid, style);
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::supertile::{build_supertile, Facing, SupertileSpec};
    use crate::tileset::all_oriented_tiles;
    use proptest::prelude::*;

    fn supertile(k: u32, f: Facing) -> TileGrid {
        build_supertile(SupertileSpec::new(k, f)).unwrap()
    }

    #[test]
    fn ascii_round_trip_on_supertiles() {
        for k in 1..=5 {
            for f in Facing::ALL {
                let g = supertile(k, f);
                assert_eq!(parse_ascii(&render_ascii(&g)).unwrap(), g);
            }
        }
    }

    #[test]
    fn rank_two_ascii_has_three_lines() {
        let text = render_ascii(&supertile(2, Facing::NorthEast));
        assert_eq!(text.lines().count(), 3);
        assert!(text.lines().all(|l| l.len() == 11));
    }

    #[test]
    fn equal_grids_render_identically() {
        let a = TileGrid::filled(2, 2, OrientedTile::new(Prototile::Arm2, Pose::new(0, true)));
        let b = TileGrid::filled(2, 2, OrientedTile::new(Prototile::Arm2, Pose::new(0, false)));
        assert_eq!(a, b);
        assert_eq!(render_ascii(&a), render_ascii(&b));
        assert_eq!(render_svg(&a, &RenderStyle::default()), render_svg(&b, &RenderStyle::default()));
    }

    #[test]
    fn ascii_parse_errors() {
        assert!(parse_ascii("B0. B0\n").is_err());
        assert!(parse_ascii("Q0.\n").is_err());
        assert!(parse_ascii("B4.\n").is_err());
        assert!(parse_ascii("B0x\n").is_err());
        assert!(parse_ascii("B0. C0.\nB0.\n").is_err());
        assert!(parse_ascii("").is_err());
    }

    #[test]
    fn svg_is_deterministic() {
        let g = supertile(3, Facing::SouthWest);
        let style = RenderStyle::default().with_overlay(true);
        assert_eq!(render_svg(&g, &style), render_svg(&g, &style));
    }

    #[test]
    fn single_bumpy_corner_has_one_cell_group() {
        let svg = render_svg(&supertile(1, Facing::NorthEast), &RenderStyle::default());
        assert_eq!(svg.matches("<g class=\"cell\"").count(), 1);
        assert_eq!(svg.matches("<circle").count(), 4);
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn svg_draws_one_arrow_per_labelled_slot() {
        for &t in all_oriented_tiles() {
            let g = TileGrid::filled(1, 1, t);
            let svg = render_svg(&g, &RenderStyle::default());
            let slots: usize = t.labels().iter().map(|l| l.slots.iter().flatten().count()).sum();
            assert_eq!(svg.matches("<line").count(), slots);
            assert_eq!(svg.matches("<polygon").count(), slots);
        }
    }

    #[test]
    fn overlay_draws_nested_squares() {
        let g = supertile(4, Facing::NorthEast);
        let svg = render_svg(&g, &RenderStyle::default().with_overlay(true));
        // The middle corner's arms all run off the grid, so it gets no square.
        assert_eq!(svg.matches("class=\"rank-1\"").count(), 64);
        assert_eq!(svg.matches("class=\"rank-2\"").count(), 16);
        assert_eq!(svg.matches("class=\"rank-3\"").count(), 4);
        assert_eq!(svg.matches("class=\"rank-4\"").count(), 0);
    }

    #[test]
    fn style_rejects_non_positive_fields() {
        assert!(RenderStyle::new(0.0, 1.0, true, false).is_err());
        assert!(RenderStyle::new(10.0, -1.0, true, false).is_err());
        assert!(RenderStyle::new(f64::NAN, 1.0, true, false).is_err());
        assert!(RenderStyle::new(10.0, 0.5, false, true).is_ok());
    }

    proptest! {
        #[test]
        fn ascii_round_trip_on_arbitrary_grids(
            w in 1usize..6,
            h in 1usize..6,
            picks in proptest::collection::vec(0usize..32, 36)
        ) {
            let all = all_oriented_tiles();
            let cells = picks.iter().take(w * h).map(|&i| all[i]).collect::<Vec<_>>();
            prop_assume!(cells.len() == w * h);
            let g = TileGrid::new(w, h, cells).unwrap();
            prop_assert_eq!(parse_ascii(&render_ascii(&g)).unwrap(), g);
        }
    }
}
