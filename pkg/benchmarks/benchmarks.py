from aztecdet.kks import kks_matrix, named_kks
from aztecdet.linalg import det_bareiss, det_modular
from aztecdet.shapes import Partition, aztec_type1
from aztecdet.tilings import tiling_census


class TimeSuite:
    """
    Exact determinants of the WD33 matrix and a tiling census.
    """

    params = [10, 20, 40]
    param_names = ["n"]

    def setup(self, n):
        self.matrix = kks_matrix(named_kks("WD33", n))

    def time_det_bareiss(self, n):
        det_bareiss(self.matrix)

    def time_det_modular(self, n):
        det_modular(self.matrix)


class CensusSuite:
    def setup(self):
        self.domain = aztec_type1(Partition((3, 2, 1)))

    def time_tiling_census(self):
        tiling_census(self.domain)
