def solution(n=1000000):
    counters = {1: 1}
    largest_number = 1
    pre_counter = 1
    for start in range(2, n):
        counter = 0
        number = start
        while True:
            if number in counters:
                counter += counters[number]
                break
            if number % 2 == 0:
                number //= 2
                counter += 1
            else:
                number = (3 * number) + 1
                counter += 1
        if start not in counters:
            counters[start] = counter
        if counter > pre_counter:
            largest_number = start
            pre_counter = counter
    return largest_number


print(solution(1000))
print(solution(20000))
