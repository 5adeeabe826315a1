//! Timeline output for detection mode: a JSON-lines dataset and a standalone
//! HTML scatter plot (commits across, files down).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use crate::catalog::Label;
use crate::history::{HistoryDataset, Occurrence};
use crate::output::write_atomic;

pub const JSONL_FILE: &str = "occurrences.jsonl";
pub const HTML_FILE: &str = "timeline.html";

/// CSS class carried by every plotted occurrence.
pub const MARK_CLASS: &str = "mark";

const CELL_W: f64 = 28.0;
const ROW_H: f64 = 24.0;
const TOP: f64 = 48.0;
const BOTTOM: f64 = 40.0;
const RIGHT: f64 = 24.0;
const CHAR_W: f64 = 7.2;

/// One occurrence per line, in dataset order.
pub fn render_jsonl(occurrences: &[Occurrence]) -> String {
    let mut out = String::new();
    for o in occurrences {
        out.push_str(&serde_json::to_string(o).expect("occurrences serialize"));
        out.push('\n');
    }
    out
}

fn escape_xml(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&#39;"),
            c => out.push(c),
        }
    }
    out
}

/// JSON safe to embed inside a `<script>` element.
fn script_json(occurrences: &[Occurrence]) -> String {
    serde_json::to_string(occurrences)
        .expect("occurrences serialize")
        .replace('<', "\\u003c")
        .replace('>', "\\u003e")
        .replace('&', "\\u0026")
}

pub fn hover_text(o: &Occurrence) -> String {
    format!("{} {} ({}, {})", o.idiom_type, o.label, o.start_line, o.end_line)
}

/// Self-contained HTML page: inline SVG, style and data, no external fetches.
pub fn render_html(dataset: &HistoryDataset) -> String {
    let occurrences = &dataset.occurrences;
    let mut rows: Vec<&str> = occurrences.iter().map(|o| o.file_path.as_str()).collect();
    rows.sort_unstable();
    rows.dedup();
    let row_of: BTreeMap<&str, usize> = rows.iter().enumerate().map(|(i, r)| (*r, i)).collect();
    let commits = occurrences.iter().map(|o| o.commit_index + 1).max().unwrap_or(0).max(dataset.commit_count).max(1);

    let longest = rows.iter().map(|r| r.chars().count()).max().unwrap_or(0);
    let left = (longest as f64 * CHAR_W + 16.0).clamp(80.0, 420.0);
    let width = left + commits as f64 * CELL_W + RIGHT;
    let height = TOP + rows.len().max(1) as f64 * ROW_H + BOTTOM;
    let x_of = |commit: usize| left + (commit as f64 + 0.5) * CELL_W;
    let y_of = |row: usize| TOP + (row as f64 + 0.5) * ROW_H;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    // Axes.
    let plot_bottom = height - BOTTOM;
    let _ = writeln!(svg, r#"<line class="axis" x1="{left:.1}" y1="{TOP:.1}" x2="{left:.1}" y2="{plot_bottom:.1}"/>"#);
    let _ = writeln!(
        svg,
        r#"<line class="axis" x1="{left:.1}" y1="{plot_bottom:.1}" x2="{:.1}" y2="{plot_bottom:.1}"/>"#,
        width - RIGHT
    );
    let step = commits.div_ceil(40).max(1);
    for c in (0..commits).step_by(step) {
        let _ = writeln!(
            svg,
            r#"<text class="tick" x="{:.1}" y="{:.1}" text-anchor="middle">{c}</text>"#,
            x_of(c),
            plot_bottom + 16.0
        );
    }
    let _ = writeln!(
        svg,
        r#"<text class="label" x="{:.1}" y="{:.1}" text-anchor="middle">commit</text>"#,
        left + (commits as f64 * CELL_W) / 2.0,
        plot_bottom + 34.0
    );
    for (i, row) in rows.iter().enumerate() {
        let _ = writeln!(
            svg,
            r#"<line class="grid" x1="{left:.1}" y1="{y:.1}" x2="{:.1}" y2="{y:.1}"/>"#,
            width - RIGHT,
            y = y_of(i)
        );
        let _ = writeln!(
            svg,
            r#"<text class="file" x="{:.1}" y="{:.1}" text-anchor="end">{}</text>"#,
            left - 8.0,
            y_of(i) + 4.0,
            escape_xml(row)
        );
    }
    if rows.is_empty() {
        let _ = writeln!(
            svg,
            r#"<text class="label" x="{:.1}" y="{:.1}" text-anchor="middle">no occurrences</text>"#,
            left + (commits as f64 * CELL_W) / 2.0,
            y_of(0) + 4.0
        );
    }

    // Occurrences sharing a cell are spread horizontally inside it.
    let mut cells: BTreeMap<(usize, usize), Vec<&Occurrence>> = BTreeMap::new();
    for o in occurrences {
        cells.entry((o.commit_index, row_of[o.file_path.as_str()])).or_default().push(o);
    }
    for ((commit, row), group) in &cells {
        let n = group.len() as f64;
        let spread = (CELL_W - 10.0).min(6.0 * (n - 1.0));
        for (i, o) in group.iter().enumerate() {
            let dx = if n > 1.0 { -spread / 2.0 + spread * i as f64 / (n - 1.0) } else { 0.0 };
            let class = match o.label {
                Label::Py => "py",
                Label::NPy => "npy",
            };
            let _ = writeln!(
                svg,
                r#"<circle class="{MARK_CLASS} {class}" cx="{:.1}" cy="{:.1}" r="5"><title>{}</title></circle>"#,
                x_of(*commit) + dx,
                y_of(*row),
                escape_xml(&hover_text(o))
            );
        }
    }
    svg.push_str("</svg>\n");

    let py = occurrences.iter().filter(|o| o.label == Label::Py).count();
    let npy = occurrences.len() - py;
    let mut html = String::new();
    html.push_str("<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n");
    html.push_str("<title>Idiom timeline</title>\n<style>\n");
    html.push_str(STYLE);
    html.push_str("</style>\n</head>\n<body>\n<h1>Idiom timeline</h1>\n");
    let _ = writeln!(
        html,
        "<p class=\"summary\">{} commits, {} files, <span class=\"legend py\">&#9679; Py</span> {py}, \
         <span class=\"legend npy\">&#9679; NPy</span> {npy}</p>",
        dataset.commit_count,
        rows.len()
    );
    html.push_str("<div class=\"plot\">\n");
    html.push_str(&svg);
    html.push_str("</div>\n");
    let _ =
        writeln!(html, "<script type=\"application/json\" id=\"occurrences\">{}</script>", script_json(occurrences));
    html.push_str("</body>\n</html>\n");
    html
}

const STYLE: &str = "body { font-family: sans-serif; margin: 1.5em; color: #222; }
h1 { font-size: 1.3em; }
.plot { overflow: auto; border: 1px solid #ddd; }
.axis { stroke: #444; stroke-width: 1; }
.grid { stroke: #eee; stroke-width: 1; }
.tick, .file, .label { font-size: 11px; fill: #444; font-family: monospace; }
.label { font-family: sans-serif; }
circle.py { fill: #2e9e44; fill-opacity: 0.8; }
circle.npy { fill: #d1342f; fill-opacity: 0.8; }
circle:hover { stroke: #000; stroke-width: 1.5; }
.legend.py { color: #2e9e44; }
.legend.npy { color: #d1342f; }
";

/// Writes the JSON-lines dataset and the HTML page into `out_dir`, creating
/// the directory if needed. Returns both paths.
pub fn emit_timeline(dataset: &HistoryDataset, out_dir: &Path) -> io::Result<(PathBuf, PathBuf)> {
    fs::create_dir_all(out_dir)?;
    let jsonl = out_dir.join(JSONL_FILE);
    let html = out_dir.join(HTML_FILE);
    write_atomic(&jsonl, render_jsonl(&dataset.occurrences).as_bytes())?;
    write_atomic(&html, render_html(dataset).as_bytes())?;
    Ok((jsonl, html))
}

/// Number of plotted occurrences in a rendered page.
pub fn count_marks(html: &str) -> usize {
    html.matches(&format!("class=\"{MARK_CLASS} ")).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::IdiomType;

    fn occ(commit_index: usize, file: &str, label: Label, start: usize) -> Occurrence {
        Occurrence {
            commit_index,
            commit_id: format!("c{commit_index}"),
            file_path: file.into(),
            idiom_type: IdiomType::VariableSwapping,
            label,
            start_line: start,
            end_line: start + 2,
            score: 100.0,
        }
    }

    fn dataset(occurrences: Vec<Occurrence>) -> HistoryDataset {
        HistoryDataset { commit_count: 3, occurrences, warnings: Vec::new() }
    }

    #[test]
    fn empty_dataset() {
        let d = dataset(Vec::new());
        assert_eq!(render_jsonl(&d.occurrences), "");
        let html = render_html(&d);
        assert_eq!(count_marks(&html), 0);
        assert!(html.contains("class=\"axis\""));
    }

    #[test]
    fn one_mark_per_record() {
        let d = dataset(vec![
            occ(0, "app.py", Label::NPy, 1),
            occ(0, "app.py", Label::NPy, 9),
            occ(1, "app.py", Label::Py, 1),
            occ(2, "<odd>.py", Label::Py, 4),
        ]);
        let html = render_html(&d);
        assert_eq!(count_marks(&html), 4);
        assert_eq!(render_jsonl(&d.occurrences).lines().count(), 4);
        assert_eq!(html.matches("circle class=\"mark py\"").count(), 2);
        assert!(html.contains("<title>variable-swapping NPy (9, 11)</title>"));
        assert!(html.contains("&lt;odd&gt;.py"));
        assert!(!html.contains("<odd>"));
    }

    #[test]
    fn no_external_resources() {
        let html = render_html(&dataset(vec![occ(0, "a.py", Label::Py, 1)]));
        for needle in ["src=", "href=", "@import", "url("] {
            assert!(!html.contains(needle), "{needle}");
        }
    }

    #[test]
    fn red_before_green_on_a_switching_row() {
        let html = render_html(&dataset(vec![occ(0, "app.py", Label::NPy, 1), occ(2, "app.py", Label::Py, 1)]));
        let x = |class: &str| -> f64 {
            let at = html.find(&format!("class=\"mark {class}\" cx=\"")).unwrap();
            let rest = &html[at..];
            let start = rest.find("cx=\"").unwrap() + 4;
            let end = start + rest[start..].find('"').unwrap();
            rest[start..end].parse().unwrap()
        };
        assert!(x("npy") < x("py"));
    }

    #[test]
    fn emit_writes_both_files() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("nested/out");
        let d = dataset(vec![occ(0, "a.py", Label::Py, 1)]);
        let (jsonl, html) = emit_timeline(&d, &out).unwrap();
        assert_eq!(fs::read_to_string(jsonl).unwrap().lines().count(), 1);
        assert_eq!(count_marks(&fs::read_to_string(html).unwrap()), 1);
    }
}
