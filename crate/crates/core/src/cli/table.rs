//! Fixed-header tables serialized as CSV or JSON.

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Cell {
    Int(u64),
    Float(f64),
}

impl Cell {
    /// Shortest representation that parses back to the same value.
    fn text(&self) -> String {
        match *self {
            Cell::Int(i) => i.to_string(),
            Cell::Float(x) => format!("{x:?}"),
        }
    }

    fn json(&self) -> serde_json::Value {
        match *self {
            Cell::Int(i) => i.into(),
            Cell::Float(x) => x.into(),
        }
    }
}

pub(crate) struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub(crate) fn new<const N: usize, I>(header: [&'static str; N], rows: I) -> Self
    where
        I: IntoIterator<Item = Vec<Cell>>,
    {
        let rows: Vec<Vec<Cell>> = rows.into_iter().collect();
        debug_assert!(rows.iter().all(|r| r.len() == N));
        Table { header: header.to_vec(), rows }
    }

    pub(crate) fn to_csv(&self) -> Vec<u8> {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            let fields: Vec<String> = row.iter().map(Cell::text).collect();
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out.into_bytes()
    }

    /// An array of objects keyed by the header.
    pub(crate) fn to_json(&self) -> Vec<u8> {
        let rows: Vec<serde_json::Map<String, serde_json::Value>> = self
            .rows
            .iter()
            .map(|row| self.header.iter().map(|h| h.to_string()).zip(row.iter().map(Cell::json)).collect())
            .collect();
        let mut bytes = serde_json::to_vec_pretty(&rows).expect("plain values serialize");
        bytes.push(b'\n');
        bytes
    }
}
