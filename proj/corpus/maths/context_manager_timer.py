class Recorder:
    def __init__(self, label):
        self.label = label
        self.events = []

    def __enter__(self):
        self.events.append("enter " + self.label)
        return self

    def __exit__(self, exc_type, exc, tb):
        self.events.append("exit " + self.label)
        return False


with Recorder("sum") as rec:
    rec.events.append(str(sum(range(1, 101))))
print(rec.events)
