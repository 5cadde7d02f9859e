"""parlis: parallel LIS / weighted-LIS engine and batch-parallel vEB trees."""

from .baselines import SortedSetOracle, brute_lis, brute_wlis, oracle_sorted_set, seq_avl, seq_bs
from .dataset import Dataset, gen_line, gen_range, gen_weights, read_dataset, with_weights, write_dataset
from .lis import LisResult, frontiers, lis_ranks, reconstruct_lis
from .parallel import get_num_threads, num_threads, set_num_threads
from .range_tree import RangeTree
from .range_veb import RangeVebTree
from .staircase import Point, Staircase, covers
from .tournament import TournamentTree
from .veb import VebTree
from .wlis import WlisResult, reconstruct_wlis, wlis

__all__ = [
    "Dataset",
    "LisResult",
    "Point",
    "RangeTree",
    "RangeVebTree",
    "SortedSetOracle",
    "Staircase",
    "TournamentTree",
    "VebTree",
    "WlisResult",
    "brute_lis",
    "brute_wlis",
    "covers",
    "frontiers",
    "gen_line",
    "gen_range",
    "gen_weights",
    "get_num_threads",
    "lis_ranks",
    "num_threads",
    "oracle_sorted_set",
    "read_dataset",
    "reconstruct_lis",
    "reconstruct_wlis",
    "seq_avl",
    "seq_bs",
    "set_num_threads",
    "wlis",
    "with_weights",
    "write_dataset",
]
