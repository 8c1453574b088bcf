use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::{Approach, Axis, MembershipGrid};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    /// Binary greymap of the sliced plane.
    PgmSlice,
    /// `x,y,z,escape` rows, `-1` for members.
    Csv,
    /// One byte per cell plus a `<dest>.txt` sidecar.
    VoxelRaw,
}

/// Byte for an escape count: 0 for members, otherwise
/// `1 + ⌊254·(n − 1)/(n_max − 1)⌋`.
pub fn pgm_byte(count: u32, n_max: u32) -> u8 {
    if count >= n_max {
        return 0;
    }
    let n = u64::from(count.max(1));
    (1 + 254 * (n - 1) / u64::from(n_max - 1)) as u8
}

/// Write `grid` to `dest`. Voxel exports also write `<dest>.txt`.
pub fn export<T: Scalar>(grid: &MembershipGrid<T>, format: ExportFormat, dest: &Path) -> Result<()> {
    if format == ExportFormat::PgmSlice && grid.config().slice.is_none() {
        return Err(Error::SliceRequired);
    }
    let mut w = BufWriter::new(File::create(dest)?);
    export_to_writer(grid, format, &mut w)?;
    w.flush()?;
    if format == ExportFormat::VoxelRaw {
        let mut side = BufWriter::new(File::create(sidecar_path(dest))?);
        write_sidecar(grid, &mut side)?;
        side.flush()?;
    }
    Ok(())
}

fn sidecar_path(dest: &Path) -> PathBuf {
    let mut s = dest.as_os_str().to_owned();
    s.push(".txt");
    PathBuf::from(s)
}

/// Write the main payload only (no sidecar).
pub fn export_to_writer<T: Scalar, W: Write>(grid: &MembershipGrid<T>, format: ExportFormat, w: &mut W) -> Result<()> {
    match format {
        ExportFormat::PgmSlice => write_pgm(grid, w),
        ExportFormat::Csv => write_csv(grid, w),
        ExportFormat::VoxelRaw => write_raw(grid, w),
    }
}

/// Axes shown horizontally and vertically for a slice along `axis`.
fn image_axes(axis: Axis) -> (usize, usize) {
    match axis {
        Axis::X => (1, 2),
        Axis::Y => (0, 2),
        Axis::Z => (0, 1),
    }
}

fn write_pgm<T: Scalar, W: Write>(grid: &MembershipGrid<T>, w: &mut W) -> Result<()> {
    let slice = grid.config().slice.ok_or(Error::SliceRequired)?;
    let (h_axis, v_axis) = image_axes(slice.axis);
    let shape = grid.shape();
    let (width, height) = (shape[h_axis], shape[v_axis]);
    let n_max = grid.config().n_max;
    write!(w, "P5\n{width} {height}\n255\n")?;
    let mut row = vec![0u8; width];
    // Top row is the largest coordinate on the vertical axis.
    for v in (0..height).rev() {
        for (u, px) in row.iter_mut().enumerate() {
            let mut idx = [0usize; 3];
            idx[h_axis] = u;
            idx[v_axis] = v;
            *px = pgm_byte(grid.get(idx[0], idx[1], idx[2]), n_max);
        }
        w.write_all(&row)?;
    }
    Ok(())
}

fn write_csv<T: Scalar, W: Write>(grid: &MembershipGrid<T>, w: &mut W) -> Result<()> {
    writeln!(w, "x,y,z,escape")?;
    let n_max = grid.config().n_max;
    for ([i, j, k], count) in grid.cells() {
        let p = grid.cell_center(i, j, k);
        let escape = if count >= n_max { -1 } else { i64::from(count) };
        writeln!(w, "{},{},{},{}", fmt_sig(p[0]), fmt_sig(p[1]), fmt_sig(p[2]), escape)?;
    }
    Ok(())
}

fn write_raw<T: Scalar, W: Write>(grid: &MembershipGrid<T>, w: &mut W) -> Result<()> {
    let n_max = grid.config().n_max;
    let bytes: Vec<u8> = grid.counts().iter().map(|&c| pgm_byte(c, n_max)).collect();
    w.write_all(&bytes)?;
    Ok(())
}

fn write_sidecar<T: Scalar, W: Write>(grid: &MembershipGrid<T>, w: &mut W) -> Result<()> {
    let cfg = grid.config();
    let [nx, ny, nz] = grid.shape();
    let approach = match cfg.approach {
        Approach::First => "first",
        Approach::Second => "second",
    };
    writeln!(w, "approach={approach}")?;
    writeln!(w, "n_max={}", cfg.n_max)?;
    for (iv, name) in cfg.region.iter().zip(["x", "y", "z"]) {
        writeln!(w, "region_{name}={}:{}", fmt_sig(iv.lo), fmt_sig(iv.hi))?;
    }
    writeln!(w, "resolution={nx},{ny},{nz}")?;
    if let Some(s) = cfg.slice {
        writeln!(w, "slice={}={}", s.axis.name(), fmt_sig(s.value))?;
    }
    writeln!(w, "layout=u8,x-fastest")?;
    Ok(())
}

/// Plain decimal with nine significant digits.
fn fmt_sig<T: Scalar>(v: T) -> String {
    let v = v.to_f64().unwrap_or(f64::NAN);
    if v == 0.0 {
        return "0.00000000".to_string();
    }
    let exp = v.abs().log10().floor() as i32;
    let decimals = (8 - exp).max(0) as usize;
    format!("{v:.decimals$}")
}
