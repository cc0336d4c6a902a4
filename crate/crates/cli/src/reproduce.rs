//! The stored tables, regenerated from scratch.

use keralapi::exact::pow10;
use keralapi::{
    build_ledger, fixed_point, scan_range, Correction, ExactInt, Formula, Policy, Result,
};

use crate::args::TableArg;
use crate::render::{ledger_grid, report_grid, Cell, Column, Grid};

pub fn madhava_diameter() -> ExactInt {
    pow10(11) * 9u8
}

const COLUMN_LABELS: [&str; 3] = [
    "ignoring fractions",
    "operation-wise rounding",
    "final rounding",
];

/// Three labelled columns, each produced by one policy.
fn three_column_table(formula: Formula, from: u64, to: u64, policies: [Policy; 3]) -> Result<Grid> {
    let d = madhava_diameter();
    let columns = policies
        .iter()
        .map(|p| scan_range(formula, &d, *p, from, to))
        .collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::new();
    for i in 0..columns[0].len() {
        let mut row = vec![Cell::Count(columns[0][i].n)];
        row.extend(
            columns
                .iter()
                .map(|c| Cell::Int(c[i].circumference.clone())),
        );
        rows.push(row);
    }
    let mapping: Vec<String> = COLUMN_LABELS
        .iter()
        .zip(&policies)
        .map(|(label, p)| format!("{label} = {}", p.name()))
        .collect();
    let mut grid_columns = vec![Column::new("n", "n")];
    grid_columns.extend(
        COLUMN_LABELS
            .iter()
            .map(|l| Column::new(&l.replace(['-', ' '], "_"), l)),
    );
    Ok(Grid {
        notes: vec![
            format!("{formula}, D = {d}, n = {from}..{to}"),
            format!("columns: {}", mapping.join(", ")),
        ],
        columns: grid_columns,
        rows,
        footer: Vec::new(),
    })
}

pub fn table(which: TableArg) -> Result<Grid> {
    match which {
        TableArg::VarmanLedger => Ok(ledger_grid(&build_ledger(
            &pow10(17),
            Policy::FloorEachOp,
            None,
        )?)),
        TableArg::Table2 => three_column_table(
            Formula::F1,
            18,
            27,
            [
                Policy::final_floor(),
                Policy::FloorEachOp,
                Policy::NearestEachOp,
            ],
        ),
        TableArg::Table3 => three_column_table(
            Formula::F2(Correction::C3),
            35,
            65,
            [
                Policy::FloorEachOp,
                Policy::NearestEachOp,
                Policy::final_floor(),
            ],
        ),
        TableArg::TableF4 => three_column_table(
            Formula::F4,
            210,
            250,
            [
                Policy::FloorEachOp,
                Policy::NearestEachOp,
                Policy::final_nearest(),
            ],
        ),
        TableArg::F3FixedPoints => {
            let d = madhava_diameter();
            let reports = [
                Policy::FloorEachOp,
                Policy::NearestEachOp,
                Policy::final_nearest(),
            ]
            .into_iter()
            .map(|p| {
                fixed_point(
                    Formula::F3,
                    &d,
                    p,
                    keralapi::convergence::DEFAULT_WINDOW,
                    20_000,
                )
            })
            .collect::<Result<Vec<_>>>()?;
            let mut grid = report_grid(&reports);
            grid.notes.push(format!("f3, D = {d}"));
            Ok(grid)
        }
    }
}
