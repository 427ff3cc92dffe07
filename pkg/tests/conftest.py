import csv
import pathlib

import pytest

DATA = pathlib.Path(__file__).parent / "data"
PKG_DATA = pathlib.Path(__file__).parent.parent / "src" / "sentinews" / "data"


@pytest.fixture(scope="session")
def pkg_data():
    return PKG_DATA


@pytest.fixture(scope="session")
def porter_sample():
    with open(DATA / "porter_sample.csv", newline="") as fh:
        return [(row["word"], row["stem"]) for row in csv.DictReader(fh)]


@pytest.fixture
def headlines_csv(tmp_path):
    path = tmp_path / "headlines.csv"
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["date", "text", "junk"])
        writer.writerows([
            ["2020-01-02", "Profits soar at BigBank", "x"],
            ["2020-01-03", "Shares crash amid panic", "y"],
            ["03-Jan-20", "Shares   crash amid panic", "dupe after ws-normalize"],
            ["2020-01-04", "", "empty text"],
            ["not-a-date", "Valid text, bad date", "z"],
            ["2020-01-05", "Calm session on the exchange", "w"],
        ])
    return path


@pytest.fixture
def ohlcv_csv(tmp_path):
    path = tmp_path / "prices.csv"
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["Date", "Open", "High", "Low", "Close",
                         "Adj Close", "Volume", "Name"])
        writer.writerows([
            ["2020-01-03", "10", "12", "9", "11", "11", "1000", "ABC"],
            ["2020-01-02", "9", "11", "8", "10", "10", "900", "ABC"],
            ["2020-01-02", "5", "4", "6", "5", "5", "100", "BAD"],  # high < low
            ["2020-01-06", "20", "22", "19", "21", "21", "500", "XYZ"],
        ])
    return path
