//! Rendering of count tables and the published values for `--verify`.

use wcn_core::enumerate::{CountRow, Extremal, TableSchema};

fn opt(v: Option<u64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn witness(e: &Option<Extremal>) -> String {
    e.as_ref().map_or_else(|| "-".to_string(), |e| format!("{}={}", e.witness, e.factorization))
}

pub fn columns(schema: TableSchema) -> &'static [&'static str] {
    match schema {
        TableSchema::Table1Summary => &["N", "WCN", "C", "P", "other"],
        TableSchema::Table3 => &["(a,b;c,d)", "W_2", "p_2", "w_2", "P(a,b)", "C(a,b)"],
        TableSchema::Table4 => &["(N,k)", "C_k(N)", "C(N)", "W_k'(N)", "W'(N)"],
        TableSchema::Table5 => &["N", "C_3(N)", "W_3'(N)", "W_3' max r", "C_3 max r"],
    }
}

pub fn cells(schema: TableSchema, row: &CountRow) -> Vec<String> {
    match schema {
        TableSchema::Table1Summary => {
            vec![opt(row.hi), opt(row.weak), opt(row.carmichael), opt(row.prime_powers), opt(row.other)]
        }
        TableSchema::Table3 => vec![
            row.label.clone(),
            opt(row.weak),
            opt(row.extremal.as_ref().map(|e| e.largest_prime)),
            witness(&row.extremal),
            opt(row.prime_powers),
            opt(row.carmichael),
        ],
        TableSchema::Table4 => vec![
            row.label.clone(),
            opt(row.carmichael),
            opt(row.carmichael_total),
            opt(row.weak),
            opt(row.weak_total),
        ],
        TableSchema::Table5 => vec![
            row.label.clone(),
            opt(row.carmichael),
            opt(row.weak),
            witness(&row.extremal),
            witness(&row.carmichael_extremal),
        ],
    }
}

pub fn render_md(schema: TableSchema, rows: &[CountRow]) -> String {
    let cols = columns(schema);
    let mut out = format!("| {} |\n|{}\n", cols.join(" | "), "---|".repeat(cols.len()));
    for row in rows {
        out.push_str(&format!("| {} |\n", cells(schema, row).join(" | ")));
    }
    out
}

pub fn render_tsv(schema: TableSchema, rows: &[CountRow]) -> String {
    let mut out = columns(schema).join("\t");
    out.push('\n');
    for row in rows {
        out.push_str(&cells(schema, row).join("\t").replace('·', "*"));
        out.push('\n');
    }
    out
}

/// Printed values: `(row key, [(column, value)])`. The key is the first cell.
type Golden = &'static [(&'static str, &'static [(&'static str, &'static str)])];

const TABLE1: Golden = &[("25000", &[("WCN", "102"), ("C", "9"), ("P", "57"), ("other", "36")])];

const TABLE3: Golden = &[
    (
        "(1,10^6;1,10^6)",
        &[("W_2", "107"), ("p_2", "463"), ("w_2", "856087=43^2·463"), ("P(a,b)", "218"), ("C(a,b)", "43")],
    ),
    (
        "(10^6,2*10^6;1,2*10^6)",
        &[("W_2", "25"), ("p_2", "733"), ("w_2", "1610401=13^3·733"), ("P(a,b)", "65"), ("C(a,b)", "12")],
    ),
    ("total (1,2*10^6)", &[("W_2", "132"), ("P(a,b)", "283"), ("C(a,b)", "55")]),
    (
        "(2*10^6,10^7;1,10^3)",
        &[("W_2", "69"), ("p_2", "937"), ("w_2", "2632033=53^2·937"), ("P(a,b)", "250"), ("C(a,b)", "50")],
    ),
    ("(2*10^6,10^7;10^3,10^4)", &[("W_2", "5"), ("p_2", "1861"), ("w_2", "6924781=61^2·1861")]),
    ("(2*10^6,10^7;10^4,10^7)", &[("W_2", "0"), ("p_2", "-"), ("w_2", "-")]),
    ("total (2*10^6,10^7)", &[("W_2", "74"), ("P(a,b)", "250"), ("C(a,b)", "50")]),
    (
        "(10^7,10^8;1,10^3)",
        &[
            ("W_2", "120"),
            ("p_2", "997"),
            ("w_2", "27805333=167^2·997"),
            ("P(a,b)", "846"),
            ("C(a,b)", "150"),
        ],
    ),
    ("(10^7,10^8;10^3,10^4)", &[("W_2", "43"), ("w_2", "81390625=5^6·5209")]),
    ("(10^7,10^8;10^4,10^8)", &[("W_2", "0")]),
    ("total (10^7,10^8)", &[("W_2", "163"), ("P(a,b)", "846"), ("C(a,b)", "150")]),
];

const TABLE4: Golden = &[
    ("(10^3,2)", &[("C(N)", "1"), ("W_k'(N)", "6"), ("W'(N)", "6")]),
    ("(10^4,2)", &[("C(N)", "7"), ("W_k'(N)", "22"), ("W'(N)", "25")]),
    ("(10^5,2)", &[("C(N)", "16"), ("W_k'(N)", "51"), ("W'(N)", "70")]),
    ("(10^6,2)", &[("C(N)", "43"), ("W_k'(N)", "107"), ("W'(N)", "192")]),
    ("(2*10^6,2)", &[("C(N)", "55"), ("W_k'(N)", "132"), ("W'(N)", "243")]),
    ("(10^3,3)", &[("C_k(N)", "1"), ("W_k'(N)", "0")]),
    ("(10^4,3)", &[("C_k(N)", "7"), ("W_k'(N)", "3")]),
    ("(10^5,3)", &[("C_k(N)", "12"), ("W_k'(N)", "18")]),
    ("(10^6,3)", &[("C_k(N)", "23"), ("W_k'(N)", "68")]),
    ("(2*10^6,3)", &[("C_k(N)", "30"), ("W_k'(N)", "89")]),
    ("(10^4,4)", &[("C_k(N)", "0"), ("W_k'(N)", "0")]),
    ("(10^5,4)", &[("C_k(N)", "4"), ("W_k'(N)", "1")]),
    ("(10^6,4)", &[("C_k(N)", "19"), ("W_k'(N)", "17")]),
    ("(2*10^6,4)", &[("C_k(N)", "23"), ("W_k'(N)", "22")]),
    ("(10^5,5)", &[("C_k(N)", "0"), ("W_k'(N)", "0")]),
    ("(10^6,5)", &[("C_k(N)", "1"), ("W_k'(N)", "0")]),
    ("(2*10^6,5)", &[("C_k(N)", "2"), ("W_k'(N)", "0")]),
    ("total up to N = 2*10^6", &[("C_k(N)", "55"), ("C(N)", "55"), ("W_k'(N)", "243"), ("W'(N)", "243")]),
];

const TABLE5: Golden = &[
    ("10^3", &[("C_3(N)", "1"), ("W_3'(N)", "0"), ("W_3' max r", "-"), ("C_3 max r", "561=3·11·17")]),
    (
        "10^4",
        &[
            ("C_3(N)", "7"),
            ("W_3'(N)", "3"),
            ("W_3' max r", "6525=3^2·5^2·29"),
            ("C_3 max r", "8911=7·19·67"),
        ],
    ),
    (
        "10^5",
        &[
            ("C_3(N)", "12"),
            ("W_3'(N)", "18"),
            ("W_3' max r", "25425=3^2·5^2·113"),
            ("C_3 max r", "52633=7·73·103"),
        ],
    ),
    (
        "10^6",
        &[
            ("C_3(N)", "23"),
            ("W_3'(N)", "68"),
            ("W_3' max r", "750925=5^2·7^2·613"),
            ("C_3 max r", "530881=13·97·421"),
        ],
    ),
    (
        "2*10^6",
        &[
            ("C_3(N)", "30"),
            ("W_3'(N)", "89"),
            ("W_3' max r", "1269621=3^3·59·797"),
            ("C_3 max r", "1193221=31·61·631"),
        ],
    ),
    (
        "10^7",
        &[
            ("C_3(N)", "47"),
            ("W_3'(N)", "186"),
            ("W_3' max r", "8927425=5^2·13^2·2113"),
            ("C_3 max r", "8134561=37·109·2017"),
        ],
    ),
    (
        "10^8",
        &[
            ("C_3(N)", "84"),
            ("W_3'(N)", "413"),
            ("W_3' max r", "52280425=5^2·409·5113"),
            ("C_3 max r", "67902031=43·271·5827"),
        ],
    ),
];

fn golden(schema: TableSchema) -> Golden {
    match schema {
        TableSchema::Table1Summary => TABLE1,
        TableSchema::Table3 => TABLE3,
        TableSchema::Table4 => TABLE4,
        TableSchema::Table5 => TABLE5,
    }
}

/// Differences between the computed rows and the published values, one line
/// each. Published rows that lie beyond the computed bound are
/// not compared.
pub fn verify(schema: TableSchema, rows: &[CountRow]) -> Vec<String> {
    let cols = columns(schema);
    let mut problems = Vec::new();
    for row in rows {
        let cells = cells(schema, row);
        let Some((_, expected)) = golden(schema).iter().find(|(key, _)| *key == cells[0]) else {
            problems.push(format!("{}: no published row", cells[0]));
            continue;
        };
        for (col, want) in expected.iter() {
            let i = cols.iter().position(|c| c == col).expect("golden column exists");
            if cells[i] != *want {
                problems.push(format!("{} {}: computed {}, printed {}", cells[0], col, cells[i], want));
            }
        }
    }
    problems
}
