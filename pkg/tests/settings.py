import os

TEST_JOBS = int(os.getenv("CIS_TEST_JOBS", "2"))
RANDOM_SEED = int(os.getenv("CIS_TEST_RANDOM_SEED", "20210405"))
RANDOM_GRAPHS = int(os.getenv("CIS_TEST_RANDOM_GRAPHS", "1000"))
