class Node:
    def __init__(self, value, next_node=None):
        self.value = value
        self.next_node = next_node


def build(values):
    head = None
    for value in reversed(values):
        head = Node(value, head)
    return head


def total(head):
    result = 0
    while head is not None:
        result += head.value
        head = head.next_node
    return result


print(total(build([1, 2, 3, 4, 5])))
print(total(build([])))
print(total(build(list(range(101)))))
