class Orders {
  int total;
  int count = 0;

  int add(int price, int qty) {
    int sum = price * qty;
    total = total + sum;
    count = count + 1;
    return sum;
  }

  int average() {
    if (count > 0) {
      int avg = total / count;
      return avg;
    }
    return 0;
  }

  void report(String name) {
    String label = name + ": " + total;
    print(label);
    int rows = find(name, 10);
    while (rows > 0) {
      rows = rows - 1;
    }
  }
}
