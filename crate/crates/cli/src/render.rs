//! Text, CSV and JSON renderings of computation results.

use clap::ValueEnum;
use keralapi::policy::TermValue;
use keralapi::sqrt::{PlaceKind, SqrtTrace};
use keralapi::{ComputationResult, ConvergenceReport, ExactInt, Formula, Policy, SeriesLedger};
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    /// Pipe-separated text
    #[default]
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Count(u64),
    Int(ExactInt),
    Text(String),
    Empty,
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Count(n) => n.to_string(),
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Count(n) => Value::from(*n),
            // big integers stay strings so no JSON reader rounds them
            Cell::Int(v) => Value::from(v.to_string()),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<&TermValue> for Cell {
    fn from(v: &TermValue) -> Self {
        match v.as_int() {
            Some(i) => Cell::Int(i.clone()),
            None => Cell::Text(v.to_string()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Column {
    pub key: String,
    pub label: String,
    /// Shown in the text table; CSV and JSON always carry every column.
    pub in_table: bool,
}

impl Column {
    pub fn new(key: &str, label: &str) -> Self {
        Column {
            key: key.to_string(),
            label: label.to_string(),
            in_table: true,
        }
    }

    fn data_only(key: &str) -> Self {
        Column {
            in_table: false,
            ..Column::new(key, key)
        }
    }
}

/// A rectangular result set plus text-only notes above and below it.
#[derive(Debug, Clone, Default)]
pub struct Grid {
    pub notes: Vec<String>,
    pub columns: Vec<Column>,
    pub rows: Vec<Vec<Cell>>,
    pub footer: Vec<String>,
}

impl Grid {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Table => self.table(),
            OutputFormat::Csv => self.csv(),
            OutputFormat::Json => self.json(),
        }
    }

    fn table(&self) -> String {
        let mut out = String::new();
        for note in &self.notes {
            out.push_str(&format!("# {note}\n"));
        }
        let shown: Vec<usize> = (0..self.columns.len())
            .filter(|&i| self.columns[i].in_table)
            .collect();
        let line = |cells: Vec<String>| cells.join(" | ") + "\n";
        out.push_str(&line(
            shown
                .iter()
                .map(|&i| self.columns[i].label.clone())
                .collect(),
        ));
        for row in &self.rows {
            out.push_str(&line(shown.iter().map(|&i| row[i].text()).collect()));
        }
        if !self.footer.is_empty() {
            out.push('\n');
            for f in &self.footer {
                out.push_str(f);
                out.push('\n');
            }
        }
        out
    }

    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(self.columns.iter().map(|c| c.key.as_str()))
            .expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::text))
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
    }

    fn json(&self) -> String {
        let records: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let map: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, cell)| (c.key.clone(), cell.json()))
                    .collect();
                Value::Object(map)
            })
            .collect();
        serde_json::to_string_pretty(&Value::Array(records)).expect("serializable") + "\n"
    }
}

fn snake(name: &str) -> String {
    name.replace('-', "_")
}

fn correction_cell(formula: &Formula) -> Cell {
    formula
        .correction()
        .map_or(Cell::Empty, |c| Cell::Text(c.name().to_string()))
}

/// One row per (formula, diameter, n), one column per policy.
pub fn results_grid(results: &[ComputationResult]) -> Grid {
    let mut policies: Vec<Policy> = Vec::new();
    let mut keys: Vec<(Formula, ExactInt, u64)> = Vec::new();
    for r in results {
        if !policies.contains(&r.policy) {
            policies.push(r.policy);
        }
        let key = (r.formula, r.diameter.clone(), r.n);
        if !keys.contains(&key) {
            keys.push(key);
        }
    }
    let mut columns = vec![
        Column::data_only("formula"),
        Column::data_only("correction"),
        Column::data_only("diameter"),
        Column::new("n", "n"),
    ];
    columns.extend(
        policies
            .iter()
            .map(|p| Column::new(&snake(p.name()), p.name())),
    );

    let rows = keys
        .iter()
        .map(|(f, d, n)| {
            let mut row = vec![
                Cell::Text(f.name().to_string()),
                correction_cell(f),
                Cell::Int(d.clone()),
                Cell::Count(*n),
            ];
            for p in &policies {
                let hit = results
                    .iter()
                    .find(|r| r.formula == *f && r.diameter == *d && r.n == *n && r.policy == *p);
                row.push(hit.map_or(Cell::Empty, |r| Cell::Int(r.circumference.clone())));
            }
            row
        })
        .collect();

    let mut notes = Vec::new();
    if let Some((f, d, _)) = keys.first() {
        if keys.iter().all(|(g, e, _)| g == f && e == d) {
            notes.push(format!("{f}, D = {d}"));
        }
    }
    Grid {
        notes,
        columns,
        rows,
        footer: Vec::new(),
    }
}

/// The five-column ledger, with O, E and C below it in the text table.
pub fn ledger_grid(ledger: &SeriesLedger) -> Grid {
    let columns = vec![
        Column::new("k", "k"),
        Column::new("x_k", "x_k"),
        Column::new("division", "division"),
        Column::new("sign", "sign"),
        Column::new("t_k", "t_k"),
    ];
    let rows = ledger
        .rows
        .iter()
        .map(|r| {
            vec![
                Cell::Count(r.k),
                Cell::from(&r.x),
                Cell::Text(format!("(÷{})", r.divisor())),
                Cell::Text(if r.sign > 0 { "+" } else { "-" }.to_string()),
                Cell::from(&r.t),
            ]
        })
        .collect();
    let footer = vec![
        format!("O = {}", ledger.odd_sum),
        format!("E = {}", ledger.even_sum),
        match ledger.circumference() {
            Ok(c) => format!("C = O - E = {c}"),
            Err(e) => format!("C = O - E: {e}"),
        },
    ];
    Grid {
        notes: vec![format!("D = {}, policy {}", ledger.diameter, ledger.policy)],
        columns,
        rows,
        footer,
    }
}

pub fn varman_grid(ledger: &SeriesLedger, circumference: &ExactInt) -> Grid {
    Grid {
        columns: [
            "diameter",
            "policy",
            "terms",
            "odd_sum",
            "even_sum",
            "circumference",
        ]
        .iter()
        .map(|k| Column::new(k, k))
        .collect(),
        rows: vec![vec![
            Cell::Int(ledger.diameter.clone()),
            Cell::Text(ledger.policy.name().to_string()),
            Cell::Count(ledger.rows.len() as u64),
            Cell::from(&ledger.odd_sum),
            Cell::from(&ledger.even_sum),
            Cell::Int(circumference.clone()),
        ]],
        ..Grid::default()
    }
}

pub fn report_grid(reports: &[ConvergenceReport]) -> Grid {
    let keys = [
        "formula",
        "correction",
        "diameter",
        "policy",
        "fixed_value",
        "onset",
        "method",
        "max_terms_examined",
    ];
    Grid {
        columns: keys.iter().map(|k| Column::new(k, k)).collect(),
        rows: reports
            .iter()
            .map(|r| {
                vec![
                    Cell::Text(r.formula.name().to_string()),
                    correction_cell(&r.formula),
                    Cell::Int(r.diameter.clone()),
                    Cell::Text(r.policy.name().to_string()),
                    Cell::Int(r.fixed_value.clone()),
                    Cell::Count(r.onset),
                    Cell::Text(r.method.name()),
                    Cell::Count(r.max_terms_examined),
                ]
            })
            .collect(),
        ..Grid::default()
    }
}

/// Step records for CSV and JSON.
fn trace_steps_grid(trace: &SqrtTrace) -> Grid {
    let keys = [
        "place",
        "working_value",
        "divisor_or_square",
        "digit",
        "subtracted",
    ];
    Grid {
        columns: keys.iter().map(|k| Column::new(k, k)).collect(),
        rows: trace
            .steps
            .iter()
            .map(|s| {
                vec![
                    Cell::Text(place_name(s.place_kind).to_string()),
                    Cell::Int(s.working_value.clone()),
                    Cell::Int(s.divisor_or_square.clone()),
                    s.digit_emitted
                        .map_or(Cell::Empty, |d| Cell::Count(d.into())),
                    Cell::Int(s.subtracted.clone()),
                ]
            })
            .collect(),
        ..Grid::default()
    }
}

fn place_name(kind: PlaceKind) -> &'static str {
    match kind {
        PlaceKind::Odd => "odd",
        PlaceKind::Even => "even",
    }
}

/// Digit pairs from the right, comma-separated: `9,8 7,6 5,4 3,2 1`.
fn paired_digits(n: &ExactInt) -> String {
    let digits: Vec<char> = n.to_string().chars().collect();
    let lead = if digits.len().is_multiple_of(2) { 2 } else { 1 };
    let mut groups = vec![digits[..lead.min(digits.len())].iter().collect::<String>()];
    groups.extend(
        digits[lead.min(digits.len())..]
            .chunks(2)
            .map(|p| p.iter().collect::<String>()),
    );
    groups
        .iter()
        .map(|g| g.chars().map(String::from).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(",")
}

/// Worksheet with a Computations / Result / Notes row pair per step.
fn trace_worksheet(trace: &SqrtTrace) -> Grid {
    let mut rows = vec![vec![
        Cell::Text(paired_digits(&trace.input)),
        Cell::Empty,
        Cell::Empty,
    ]];
    let mut root = String::new();
    let mut last_digit = None;
    for (i, step) in trace.steps.iter().enumerate() {
        let w = &step.working_value;
        match (step.place_kind, step.digit_emitted) {
            (PlaceKind::Odd, Some(d)) if i == 0 => {
                root.push(char::from(b'0' + d));
                rows.push(vec![
                    Cell::Text(format!("{w} -")),
                    Cell::Text(root.clone()),
                    Cell::Text(format!("⌊√{w}⌋ = {d}")),
                ]);
                rows.push(vec![
                    Cell::Int(step.subtracted.clone()),
                    Cell::Empty,
                    Cell::Text(format!("{d}² = {}", step.subtracted)),
                ]);
            }
            (PlaceKind::Even, Some(d)) => {
                let partial = root.clone();
                let raw = w / &step.divisor_or_square;
                let note = if raw == ExactInt::from(d) {
                    format!("⌊{w}/(2·{partial})⌋ = {d}")
                } else {
                    format!("⌊{w}/(2·{partial})⌋ = {raw}, reduced to {d}")
                };
                root.push(char::from(b'0' + d));
                rows.push(vec![
                    Cell::Text(format!("{w} -")),
                    Cell::Text(root.clone()),
                    Cell::Text(note),
                ]);
                rows.push(vec![
                    Cell::Int(step.subtracted.clone()),
                    Cell::Empty,
                    Cell::Text(format!("{d}·(2·{partial}) = {}", step.subtracted)),
                ]);
                last_digit = Some(d);
            }
            _ => {
                let d = last_digit.unwrap_or(0);
                rows.push(vec![Cell::Text(format!("{w} -")), Cell::Empty, Cell::Empty]);
                rows.push(vec![
                    Cell::Int(step.subtracted.clone()),
                    Cell::Empty,
                    Cell::Text(format!("{d}² = {}", step.subtracted)),
                ]);
            }
        }
    }
    rows.push(vec![
        Cell::Int(trace.remainder.clone()),
        Cell::Empty,
        Cell::Text("Remainder".to_string()),
    ]);
    Grid {
        notes: vec![format!(
            "{} = {}² + {}",
            trace.input, trace.root, trace.remainder
        )],
        columns: vec![
            Column::new("computation", "Computations"),
            Column::new("result", "Result"),
            Column::new("note", "Notes"),
        ],
        rows,
        footer: Vec::new(),
    }
}

pub fn render_trace(trace: &SqrtTrace, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => trace_worksheet(trace).render(format),
        _ => trace_steps_grid(trace).render(format),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use keralapi::{build_ledger, isqrt_traced};

    #[test]
    fn empty_csv_is_header_only() {
        let grid = results_grid(&[]);
        assert_eq!(
            grid.render(OutputFormat::Csv),
            "formula,correction,diameter,n\n"
        );
        assert_eq!(grid.render(OutputFormat::Json), "[]\n");
    }

    #[test]
    fn ledger_first_row() {
        let ledger = build_ledger(&keralapi::exact::pow10(17), Policy::FloorEachOp, None).unwrap();
        let text = ledger_grid(&ledger).render(OutputFormat::Table);
        let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(
            rows[1],
            "1 | 346410161513775458 | (÷1) | + | 346410161513775458"
        );
        assert_eq!(rows[38], "38 | 0 | (÷75) | - | 0");
    }

    #[test]
    fn digit_pairs() {
        assert_eq!(paired_digits(&987654321.into()), "9,8 7,6 5,4 3,2 1");
        assert_eq!(paired_digits(&1234.into()), "1 2,3 4");
        assert_eq!(paired_digits(&0.into()), "0");
    }

    #[test]
    fn worksheet_notes() {
        let trace = isqrt_traced(&987654321.into()).unwrap();
        let text = render_trace(&trace, OutputFormat::Table);
        assert!(text.contains("⌊266/(2·31)⌋ = 4"));
        assert!(text.contains("6·(2·3142) = 37704"));
        assert!(text.contains("60845 |  | Remainder"));
    }

    #[test]
    fn json_keeps_integers_as_strings() {
        let trace = isqrt_traced(&10.into()).unwrap();
        let json = render_trace(&trace, OutputFormat::Json);
        let v: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v[0]["working_value"], Value::from("10"));
        assert_eq!(v[0]["digit"], Value::from(3));
    }
}
