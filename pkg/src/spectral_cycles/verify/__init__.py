from .audit import TheoremAudit, classify_against_theorem
from .enumeration import enumerate_labeled, graph_from_mask
from .graph6 import Graph6Error, emit_graph6, parse_graph6, read_graph6_file, to_g6_str
from .scan import CycleConstraint, ScanRecord, ScanReport, ScanVerdict, Target, scan_extremal
from .search import SearchResult, hillclimb_search
