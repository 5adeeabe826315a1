import os; import sys
