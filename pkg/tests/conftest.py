import os

# every Groebner run in the test build re-checks the Buchberger postcondition
os.environ.setdefault("CHERNLAB_VERIFY_GB", "1")
