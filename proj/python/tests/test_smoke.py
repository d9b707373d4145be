"""Smoke tests for the drgpy extension module."""

import math
import os
import unittest

import drgpy


class ArrayOps(unittest.TestCase):
    def test_parse_and_format(self):
        arr = drgpy.parse_array("{4,3,2,1;1,2,3,4}")
        self.assertEqual(arr["D"], 4)
        self.assertEqual(arr["k"], 4)
        self.assertEqual(arr["b"], [4, 3, 2, 1])
        self.assertEqual(drgpy.format_array(arr["b"], arr["c"]), "{4,3,2,1;1,2,3,4}")

    def test_parse_rejects_bad_literals(self):
        with self.assertRaises(ValueError):
            drgpy.parse_array("{3;2}")

    def test_derive(self):
        dp = drgpy.derive("{3,2;1,1}")
        self.assertEqual(dp["k_seq"], [1, 3, 6])
        self.assertEqual(dp["v"], 10)
        self.assertEqual(dp["h"], 1)

    def test_ratio(self):
        self.assertEqual(drgpy.ratio_k2_over_k("{12,6,2;1,4,9}"), "3/2")


class SpectralOps(unittest.TestCase):
    def test_spectrum(self):
        sp = drgpy.spectrum("{3,2;1,1}")
        eigs = [float(x) for x in sp["eigenvalues"]]
        self.assertAlmostEqual(eigs[0], 3, places=9)
        self.assertAlmostEqual(eigs[1], 1, places=9)
        self.assertAlmostEqual(eigs[2], -2, places=9)
        self.assertEqual(sp["multiplicities"], [1, 5, 4])

    def test_standard_sequence(self):
        u = drgpy.standard_sequence("{4,3,2,1;1,2,3,4}", 2.0)
        for got, want in zip(u, [1, 0.5, 0, -0.5, -1]):
            self.assertAlmostEqual(got, want, places=12)

    def test_biggs_multiplicity(self):
        self.assertAlmostEqual(drgpy.biggs_multiplicity("{3,2;1,1}", 1.0), 5, places=9)

    def test_theta1_bound(self):
        res = drgpy.theta1_lower_bound_check("{4,3,2,1;1,2,3,4}", 1)
        self.assertEqual(res["verdict"], "equality")
        self.assertTrue(res["antipodal_signature"])


class FeasibilityOps(unittest.TestCase):
    def test_check_pass(self):
        rep = drgpy.check("{3,2;1,1}")
        self.assertEqual(rep["overall"], "pass")

    def test_check_fail(self):
        rep = drgpy.check("{3,3;1,1}")
        self.assertEqual(rep["overall"], "fail")

    def test_enumerate(self):
        records = drgpy.enumerate_arrays(k_min=3, k_max=3, d_min=2, d_max=2)
        arrays = [r["array"] for r in records]
        self.assertIn("{3,2;1,1}", arrays)

    def test_census(self):
        summary = drgpy.finiteness_census("2", 6, 4)
        self.assertTrue(summary["caps_enabled"])
        self.assertGreaterEqual(summary["total"], 1)


class GraphOps(unittest.TestCase):
    def test_certify_generator(self):
        cert = drgpy.certify("petersen()")
        self.assertTrue(cert["is_drg"])
        self.assertEqual(cert["array"], "{3,2;1,1}")

    def test_certify_fixture_file(self):
        data_dir = os.environ.get("DRG_DATA_DIR")
        if not data_dir:
            self.skipTest("DRG_DATA_DIR not set")
        cert = drgpy.certify(os.path.join(data_dir, "graphs", "doro.edges"))
        self.assertTrue(cert["is_drg"])
        self.assertEqual(cert["array"], "{10,6,4;1,2,5}")

    def test_terwilliger_and_antipodal(self):
        scan = drgpy.terwilliger_scan("icosahedron()")
        self.assertTrue(scan["is_terwilliger"])
        self.assertEqual(scan["mu"], 2)
        self.assertFalse(scan["has_quadrangle"])
        anti = drgpy.antipodal_check("hypercube(4)")
        self.assertTrue(anti["is_antipodal"])
        self.assertEqual(anti["r"], 2)

    def test_adjacency_eigenvalues(self):
        eigs = drgpy.adjacency_eigenvalues("cycle(5)")
        self.assertAlmostEqual(eigs[0], 2, places=8)
        self.assertAlmostEqual(eigs[-1], (-1 - math.sqrt(5)) / 2, places=8)


class BoundRules(unittest.TestCase):
    def test_lemma7(self):
        v = drgpy.lemma7_dichotomy("{4,3,2,1;1,2,3,4}", 2, "1")
        self.assertEqual(v["status"], "pass")

    def test_lemma9(self):
        r = drgpy.lemma9_diameter_cap("{4,3,2,1;1,2,3,4}", 3, True)
        self.assertEqual(r["diameter_cap"], 4)

    def test_terwilliger_filter(self):
        verdicts = drgpy.terwilliger_filter("{5,2,1;1,2,5}", "2")
        self.assertEqual(verdicts[1]["rule"], "P10.recognition")
        self.assertEqual(verdicts[1]["status"], "pass")

    def test_theorem2_pipeline(self):
        rep = drgpy.theorem2_pipeline("{2,1,1,1,1,1;1,1,1,1,1,2}", "1")
        self.assertEqual(rep["overall"], "pass")


class CatalogOps(unittest.TestCase):
    def test_lookup(self):
        entry = drgpy.catalog_get("4-cube")
        self.assertEqual(entry["array"], "{4,3,2,1;1,2,3,4}")
        names = {e["name"] for e in drgpy.catalog_list()}
        self.assertIn("conway-smith", names)
        with self.assertRaises(RuntimeError):
            drgpy.catalog_get("nonexistent")

    def test_families(self):
        self.assertEqual(drgpy.hadamard_family(2), "{4,3,2,1;1,2,3,4}")
        literal, note = drgpy.flag_family(2, 3)
        self.assertEqual(literal, "{4,2,2,2,2,2;1,1,1,1,1,1}")
        self.assertEqual(note, "")
        _, note5 = drgpy.flag_family(2, 5)
        self.assertIn("excluded", note5)


if __name__ == "__main__":
    unittest.main()
