import unittest
from pathlib import Path
import shutil
import tempfile
import os
import subprocess
import sys
import hashlib


ROOT = Path(__file__).resolve().parent.parent
CLI = ROOT / "sharpstab.py"


def sha256_file(p: Path) -> str:
    return hashlib.sha256(p.read_bytes()).hexdigest()


class TestDeterminism(unittest.TestCase):
    def setUp(self) -> None:
        self.tmp = Path(tempfile.mkdtemp(prefix="sharpstab_det_"))

    def tearDown(self) -> None:
        shutil.rmtree(self.tmp, ignore_errors=True)

    def test_summary_is_stable(self) -> None:
        out1 = self.tmp / "_ci_out1" / "table"
        out2 = self.tmp / "_ci_out2" / "table"

        env = dict(os.environ)
        env["PYTHONHASHSEED"] = "0"
        env["SOURCE_DATE_EPOCH"] = "0"

        def run(out: Path) -> None:
            cmd = [
                sys.executable,
                str(CLI),
                "table",
                "1,1",
                "1",
                "--d",
                "1",
                "--h",
                "0",
                "--n",
                "3:8",
                "--format",
                "json",
                "--output-dir",
                str(out),
            ]
            subprocess.check_call(cmd, cwd=str(ROOT), env=env, stdout=subprocess.DEVNULL, stderr=subprocess.DEVNULL)

        run(out1)
        run(out2)

        s1 = out1 / "sharpstab_summary.json"
        s2 = out2 / "sharpstab_summary.json"
        self.assertTrue(s1.exists() and s2.exists())
        self.assertEqual(sha256_file(s1), sha256_file(s2))


if __name__ == "__main__":
    unittest.main()
