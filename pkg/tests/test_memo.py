import shutil
import sys
import tempfile
import unittest
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from common.errors import CacheFormatError  # noqa: E402
from memo.store import CoefficientCache, canonical_key, load_cache, save_cache  # noqa: E402
from partitions.core import Partition  # noqa: E402


def P(*parts):
    return Partition(parts)


class TestCanonicalKeys(unittest.TestCase):
    def test_symmetries(self) -> None:
        self.assertEqual(canonical_key("lr", P(2), P(1), P(3)), canonical_key("lr", P(1), P(2), P(3)))
        self.assertEqual(
            canonical_key("kron", P(2, 1), P(3), P(1, 1, 1)),
            canonical_key("kron", P(1, 1, 1), P(2, 1), P(3)),
        )
        with self.assertRaises(ValueError):
            canonical_key("plethysm", P(), P(), P())


class TestCacheFile(unittest.TestCase):
    def setUp(self) -> None:
        self.tmp = Path(tempfile.mkdtemp(prefix="sharpstab_memo_"))

    def tearDown(self) -> None:
        shutil.rmtree(self.tmp, ignore_errors=True)

    def test_round_trip_is_byte_stable(self) -> None:
        cache = CoefficientCache()
        cache.put("lr", P(2, 1), P(2, 1), P(3, 2, 1), 2)
        cache.put("kron", P(2, 1), P(2, 1), P(3), 1)
        cache.put("aguiar", P(1), P(), P(1), 1)
        first = self.tmp / "a.cache"
        self.assertEqual(save_cache(first, cache), 3)

        reloaded = CoefficientCache()
        self.assertEqual(load_cache(first, reloaded), 3)
        self.assertEqual(reloaded.get("lr", P(2, 1), P(2, 1), P(3, 2, 1)), 2)
        self.assertEqual(reloaded.get("kron", P(3), P(2, 1), P(2, 1)), 1)

        second = self.tmp / "b.cache"
        save_cache(second, reloaded)
        self.assertEqual(first.read_bytes(), second.read_bytes())
        self.assertIn("aguiar|-|1|1|1", first.read_text(encoding="utf-8"))

    def test_missing_file_is_a_cold_start(self) -> None:
        cache = CoefficientCache()
        self.assertEqual(load_cache(self.tmp / "absent.cache", cache), 0)
        self.assertEqual(len(cache), 0)

    def test_comments_and_blank_lines(self) -> None:
        path = self.tmp / "c.cache"
        path.write_text("# header\n\nlr|1|1|2|1\n", encoding="utf-8")
        cache = CoefficientCache()
        self.assertEqual(load_cache(path, cache), 1)

    def test_corrupt_line_is_reported_with_its_number(self) -> None:
        path = self.tmp / "bad.cache"
        path.write_text("lr|1|1|2|1\nlr|1|1|2\n", encoding="utf-8")
        with self.assertRaises(CacheFormatError) as ctx:
            load_cache(path, CoefficientCache())
        self.assertEqual(ctx.exception.line_no, 2)

        for body in ("lr|1|1|1,2|1\n", "plethysm|1|1|2|1\n", "lr|1|1|2|-1\n", "lr|1|1|2|x\n"):
            path.write_text(body, encoding="utf-8")
            with self.assertRaises(CacheFormatError):
                load_cache(path, CoefficientCache())


if __name__ == "__main__":
    unittest.main()
