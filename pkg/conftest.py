import os
import sys

# Project root on the path so tests import semistable, cli, models and app
sys.path.insert(0, os.path.abspath(os.path.dirname(__file__)))
