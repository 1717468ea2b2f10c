//! On-disk block cache. Files are written to a temporary name in the same
//! directory and renamed into place.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use hairycalc::cache::{decode_block, encode_block};
use hairycalc::engine::{build_block, BlockKey, BuildOptions, ChainBlock, Truncation};
use hairycalc::Result;

#[derive(Clone, Debug)]
pub struct BlockStore {
    dir: PathBuf,
}

impl BlockStore {
    pub fn open(dir: &Path) -> Result<BlockStore> {
        fs::create_dir_all(dir)?;
        Ok(BlockStore { dir: dir.to_path_buf() })
    }

    pub fn path(&self, key: &BlockKey, opts: &BuildOptions) -> PathBuf {
        let mut name = key.slug();
        if let Some((lo, hi)) = opts.degree_window {
            name.push_str(&format!("_w{lo}_{hi}"));
        }
        match &opts.truncation {
            Some(Truncation::Total(n)) => name.push_str(&format!("_n{n}")),
            Some(Truncation::PerColor(ns)) => {
                let parts: Vec<String> = ns.iter().map(|n| n.to_string()).collect();
                name.push_str(&format!("_n{}", parts.join("-")));
            }
            None => {}
        }
        name.push_str(".blk");
        self.dir.join(name)
    }

    pub fn load(&self, key: &BlockKey, opts: &BuildOptions) -> Result<Option<ChainBlock>> {
        let path = self.path(key, opts);
        if !path.exists() {
            return Ok(None);
        }
        let text = fs::read_to_string(&path)?;
        decode_block(key, &text, &path.display().to_string()).map(Some)
    }

    pub fn store(&self, block: &ChainBlock, opts: &BuildOptions) -> Result<()> {
        let path = self.path(&block.key, opts);
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(encode_block(block).as_bytes())?;
        tmp.flush()?;
        tmp.persist(&path).map_err(|e| e.error)?;
        Ok(())
    }

    /// Cached block if present, otherwise a freshly built one that is then
    /// written back.
    pub fn provide(&self, key: &BlockKey, opts: &BuildOptions) -> Result<ChainBlock> {
        if let Some(block) = self.load(key, opts)? {
            block.complex.check_square_zero()?;
            return Ok(block);
        }
        let block = build_block(key, opts)?;
        self.store(&block, opts)?;
        Ok(block)
    }
}
