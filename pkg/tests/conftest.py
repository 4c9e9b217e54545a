import sys
from pathlib import Path

# so test modules can import the shared brute-force oracles
sys.path.insert(0, str(Path(__file__).parent))
