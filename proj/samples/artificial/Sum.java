public class Sum {
    /** Adds the numbers 1..n. */
    public static int sum(int n) {
        int total = 0;
        for (int i = 1; i <= n; i++) {
            total += i; // running total
        }
        return total;
    }

    public static void main(String[] args) {
        System.out.println("sum = " + sum(100));
    }
}
