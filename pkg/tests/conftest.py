import os
import sys
import tempfile
from pathlib import Path

# Keep the sequence cache out of the user's home directory
os.environ.setdefault("IMPL_CACHE_ROOT", tempfile.mkdtemp(prefix="implication-census-"))
os.environ["IMPL_GLYPHS"] = "ascii"
os.environ["IMPL_CENSUS_CAP"] = "10"
os.environ["IMPL_WORKERS"] = "1"

# Add src directory to Python path
src_path = Path(__file__).parent.parent / "src"
sys.path.insert(0, str(src_path))
